#include "ergm/lambert_w.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ergm/errors.hpp"

namespace ergm {
namespace {

constexpr double kE = 2.718281828459045;
constexpr int kMaxIterations = 100;

// Offsets from the branch point below this are indistinguishable from
// rounding in x itself; the answer is -1 to within the residual bound.
constexpr double kBranchPointSnap = 1e-15;

// Series in p = sqrt(2(ex + 1)) about the branch point; sign selects branch.
double branch_series(double x, double sign) {
  const double p = sign * std::sqrt(std::max(0.0, 2.0 * (kE * x + 1.0)));
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

double principal_guess(double x) {
  if (x < -0.32) return branch_series(x, 1.0);
  if (x < 3.0) {
    // Winitzki-style approximation, good to a few percent here.
    const double l = std::log1p(x);
    return l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

double minus1_guess(double x) {
  if (x > -0.1) {
    const double l = std::log(-x);
    return l - std::log(-l);
  }
  // x = -exp(-u-1); the midpoint of the two Chatzigeorgiou bounds.
  const double u = std::max(0.0, -std::log(-x) - 1.0);
  return -1.0 - std::sqrt(2.0 * u) - 5.0 * u / 6.0;
}

// Iterates in long double: next to the branch point w e^w is flat, so the
// extra bits in the residual translate directly into accuracy in w.
double halley(double x, double guess) {
  using Real = long double;
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  const Real xl = x;
  Real w = guess;
  for (int i = 0; i < kMaxIterations; ++i) {
    const Real ew = std::exp(w);
    const Real f = w * ew - xl;
    if (std::abs(f) <= 8 * eps * std::max(std::abs(xl), std::abs(w * ew))) return static_cast<double>(w);
    const Real wp1 = w + 1;
    const Real step = f / (ew * wp1 - (w + 2) * f / (2 * wp1));
    if (!std::isfinite(static_cast<double>(step))) break;
    w -= step;
    if (std::abs(step) < 1e-15L * std::max<Real>(1, std::abs(w))) return static_cast<double>(w);
  }
  throw ConvergenceError("lambert_w: no convergence");
}

}  // namespace

double lambert_w(Branch branch, double x) {
  constexpr double inv_e = 0.36787944117144233;
  if (std::isnan(x) || x < -inv_e) throw DomainError("lambert_w: argument below -1/e");
  if (branch == Branch::Minus1 && x >= 0.0)
    throw DomainError("lambert_w: W-1 requires a negative argument");
  if (std::abs(x + inv_e) <= kBranchPointSnap) return -1.0;

  if (branch == Branch::Principal) {
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    return std::max(-1.0, halley(x, principal_guess(x)));
  }
  return std::min(-1.0, halley(x, minus1_guess(x)));
}

}  // namespace ergm
