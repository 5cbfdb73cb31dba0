#include "ergm/criticals.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ergm/curves.hpp"
#include "ergm/errors.hpp"
#include "ergm/lambert_w.hpp"

namespace ergm {
namespace {

// ln t_k, accurate for large k where t_k is close to 1.
double log_turan_triangle(double k) { return std::log1p(-(3.0 * k + 1.0) / ((k + 1.0) * (k + 1.0))); }

// ln(t_k / t_{k-1}) = ln p(k) for k >= 3.
double log_turan_ratio(double k) { return std::log1p((3.0 * k + 2.0) / ((k + 1.0) * (k + 1.0) * (k - 2.0))); }

}  // namespace

double slope(std::int64_t k, double gamma) {
  if (k < 1) throw DomainError("slope: k must be >= 1");
  if (!(gamma > 0.0)) throw DomainError("slope: gamma must be positive");
  if (k == 1) return 0.0;
  if (k == 2) return 6.0 * std::pow(2.0 / 9.0, gamma);
  const double kk = static_cast<double>(k);
  const double prev = std::exp(gamma * log_turan_triangle(kk - 1.0));
  return kk * (kk + 1.0) * prev * std::expm1(gamma * log_turan_ratio(kk));
}

std::pair<double, double> critical_direction(std::int64_t k, double gamma) {
  if (k < 0) throw DomainError("critical_direction: k must be >= 0");
  if (k == 0) return {0.0, -1.0};
  if (k == 1) return {1.0, -std::numeric_limits<double>::infinity()};
  return {1.0, -1.0 / slope(k, gamma)};
}

SlopePattern slope_monotonicity(double gamma, std::int64_t k_max) {
  if (k_max < 3) throw DomainError("slope_monotonicity: k_max must be >= 3");
  std::vector<int> signs;
  double prev = slope(2, gamma);
  for (std::int64_t k = 3; k <= k_max; ++k) {
    const double cur = slope(k, gamma);
    const int sign = cur > prev ? 1 : (cur < prev ? -1 : 0);
    if (sign != 0 && (signs.empty() || signs.back() != sign)) signs.push_back(sign);
    prev = cur;
  }
  if (signs.empty()) throw DomainError("slope_monotonicity: constant slope sequence");
  if (signs.size() == 1) return signs[0] < 0 ? SlopePattern::Decreasing : SlopePattern::Increasing;
  if (signs.size() == 2 && signs[0] < 0) return SlopePattern::DecThenInc;
  throw DomainError("slope_monotonicity: ambiguous monotonicity pattern");
}

double gamma_star() {
  const double l = std::log(4.5);
  return lambert_w(Branch::Principal, 2.0 * l) / l;
}

double slope_increasing_threshold() { return std::log(1.5) / std::log(27.0 / 16.0); }

LambertAux lambert_aux(std::int64_t n) {
  if (n < 3) throw DomainError("lambert_aux: n must be >= 3");
  const double nn = static_cast<double>(n);
  LambertAux aux;
  aux.n = n;
  aux.a = 3.0 / ((nn + 1.0) * (nn - 2.0));
  aux.p = nn * nn * nn / ((nn + 1.0) * (nn + 1.0) * (nn - 2.0));
  aux.q = -log_turan_ratio(nn) / aux.a;
  // With -q = 1 - d, u = -(d + ln(1 - d)); written to avoid cancellation.
  const double d = 1.0 + aux.q;
  aux.u = -(d + std::log1p(-d));
  return aux;
}

double gamma_n(std::int64_t n) {
  const LambertAux aux = lambert_aux(n);
  const double w = lambert_w(Branch::Minus1, aux.q * std::exp(aux.q));
  return -(w / log_turan_ratio(static_cast<double>(n)) + 1.0 / aux.a);
}

double gamma_tilde_n(std::int64_t n) {
  if (n < 2) throw DomainError("gamma_tilde_n: n must be >= 2");
  // At n = 2 the defining equation is linear: 6 t_2^g = g t_2^{g-1}, g = 4/3.
  if (n == 2) return 4.0 / 3.0;
  const double nn = static_cast<double>(n);
  const double log_p = -log_turan_ratio(nn);
  const double a = -3.0 / (nn * nn);
  const double q = -log_p / a;
  const double w = lambert_w(Branch::Principal, q * std::exp(q));
  return -w / log_p - 1.0 / a;
}

double gamma_n_star(std::int64_t n) {
  if (n < 3) throw DomainError("gamma_n_star: n must be >= 3");
  const double nn = static_cast<double>(n);
  const double num = std::log1p(-2.0 / (nn * (nn - 1.0)));
  return num / -log_turan_ratio(nn);
}

double tie_level(std::int64_t n, double gamma) {
  if (n < 1) throw DomainError("tie_level: n must be >= 1");
  if (n == 1) return 0.0;
  const double nn = static_cast<double>(n);
  return 2.0 * (nn + 1.0) / (nn - 1.0) * std::exp(gamma * log_turan_triangle(nn));
}

double goodman_derivative(double e, double gamma) {
  if (!(e > 0.5 && e <= 1.0)) throw DomainError("goodman_derivative: e must lie in (1/2, 1]");
  return gamma * std::pow(e * (2.0 * e - 1.0), gamma - 1.0) * (4.0 * e - 1.0);
}

double goodman_derivative_turning_point(double gamma) {
  if (!(gamma > 0.5)) throw DomainError("goodman_derivative_turning_point: gamma must exceed 1/2");
  return (1.0 + 1.0 / std::sqrt(2.0 * gamma - 1.0)) / 4.0;
}

}  // namespace ergm
