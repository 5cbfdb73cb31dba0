#include "ergm/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergm/errors.hpp"

namespace ergm {
namespace {

// Slack allowed when callers pass segment endpoints computed in floating point.
constexpr double kEndpointSlack = 1e-13;

void require_unit_interval(double e, const char* who) {
  if (!(e >= 0.0 && e <= 1.0)) throw DomainError(std::string(who) + ": e must lie in [0, 1]");
}

}  // namespace

double turan_edge(std::int64_t k) {
  if (k < 0) throw DomainError("turan_edge: k must be nonnegative");
  return static_cast<double>(k) / (static_cast<double>(k) + 1.0);
}

double turan_triangle(std::int64_t k) {
  if (k < 0) throw DomainError("turan_triangle: k must be nonnegative");
  const double kk = static_cast<double>(k);
  return kk * (kk - 1.0) / ((kk + 1.0) * (kk + 1.0));
}

TuranPoint turan_point(std::int64_t k) { return {k, turan_edge(k), turan_triangle(k)}; }

SegmentIndex segment_of(double e) {
  if (!(e >= 0.0 && e < 1.0)) throw DomainError("segment_of: e must lie in [0, 1)");
  if (e <= 0.5) return 1;
  auto k = static_cast<SegmentIndex>(std::ceil(e / (1.0 - e)));
  k = std::max<SegmentIndex>(k, 1);
  while (k > 1 && e <= turan_edge(k - 1)) --k;
  while (e > turan_edge(k)) ++k;
  return k;
}

double razborov(SegmentIndex k, double e) {
  if (k < 1) throw DomainError("razborov: segment index must be >= 1");
  const double lo = turan_edge(k - 1);
  const double hi = turan_edge(k);
  if (!(e >= lo - kEndpointSlack && e <= hi + kEndpointSlack))
    throw DomainError("razborov: e outside the segment domain");
  if (k == 1) return 0.0;
  const double kk = static_cast<double>(k);
  // k(k - e(k+1)) = k(k+1)(e_k - e); clamp against rounding at the right end.
  const double y = std::sqrt(std::max(0.0, kk * (kk + 1.0) * (hi - e)));
  const double x = kk + y;
  return (kk - 1.0) * (kk - 2.0 * y) * x * x / (kk * kk * (kk + 1.0) * (kk + 1.0));
}

double lower_boundary(double e, double gamma) {
  require_unit_interval(e, "lower_boundary");
  if (!(gamma > 0.0)) throw DomainError("lower_boundary: gamma must be positive");
  if (e == 1.0) return 1.0;
  const double r = razborov(segment_of(e), e);
  return std::pow(std::max(0.0, r), gamma);
}

double goodman(double e, double gamma) {
  return std::pow(std::max(0.0, e * (2.0 * e - 1.0)), gamma);
}

double kruskal_katona(double e, int s, double gamma) {
  require_unit_interval(e, "kruskal_katona");
  if (s < 2) throw DomainError("kruskal_katona: clique size must be >= 2");
  return std::pow(e, s * gamma / 2.0);
}

double clique_lower_bound(int s, std::int64_t t, double e) {
  if (s < 2) throw DomainError("clique_lower_bound: clique size must be >= 2");
  if (t < 1) throw DomainError("clique_lower_bound: segment index must be >= 1");
  const double lo = turan_edge(t - 1);
  const double hi = turan_edge(t);
  if (!(e >= lo - kEndpointSlack && e <= hi + kEndpointSlack))
    throw DomainError("clique_lower_bound: e outside the segment domain");
  if (e < 1.0 - 1.0 / (s - 1) - kEndpointSlack)
    throw DomainError("clique_lower_bound: e below 1 - 1/(s-1)");
  const double tt = static_cast<double>(t);
  const double y = std::sqrt(std::max(0.0, tt * (tt + 1.0) * (hi - e)));
  // (t-1)!/(t-s+1)! = product of the s-2 integers t-s+2 .. t-1.
  double ratio = 1.0;
  for (std::int64_t j = t - s + 2; j <= t - 1; ++j) ratio *= static_cast<double>(j);
  const double lead = tt - (s - 1) * y;
  const double tail = std::pow((tt + y) / (tt * (tt + 1.0)), s - 1);
  return ratio * lead * tail;
}

std::optional<double> inflection_point(SegmentIndex k, double gamma) {
  if (k < 2) throw DomainError("inflection_point: segment index must be >= 2");
  if (!(gamma > 0.0)) throw DomainError("inflection_point: gamma must be positive");
  const double kk = static_cast<double>(k);
  if (gamma <= (4.0 + kk) / 6.0) return std::nullopt;
  const double h = 1.0 / (2.0 * (3.0 * gamma - 2.0));
  return kk / (kk + 1.0) * (1.0 - h * h);
}

}  // namespace ergm
