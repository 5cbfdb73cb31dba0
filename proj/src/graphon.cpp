#include "ergm/graphon.hpp"

namespace ergm {

double rate_function(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("rate_function: u must lie in [0, 1]");
  const auto xlogx = [](double x) { return x == 0.0 ? 0.0 : x * std::log(x); };
  return 0.5 * xlogx(u) + 0.5 * xlogx(1.0 - u);
}

}  // namespace ergm
