#pragma once

#include <cstdint>
#include <utility>

namespace ergm {

// s_k(gamma) = k(k+1)(t_k^gamma - t_{k-1}^gamma): slope of the chord of
// r^gamma over segment k. s_1 = 0.
double slope(std::int64_t k, double gamma);

// sigma_0 = (0, -1), sigma_k = (1, -1/s_k) for k >= 1 (the k = 1 entry has
// an infinite second coordinate since s_1 = 0).
std::pair<double, double> critical_direction(std::int64_t k, double gamma);

enum class SlopePattern { Decreasing, DecThenInc, Increasing };

// Empirical monotonicity of s_2..s_{k_max}. Throws DomainError if the
// sequence changes direction more than once or turns from up to down.
SlopePattern slope_monotonicity(double gamma, std::int64_t k_max);

// gamma* with s_2(gamma*) = 3 gamma*.
double gamma_star();

// log_{27/16}(3/2): above it s_k is increasing from k = 2.
double slope_increasing_threshold();

struct LambertAux {
  std::int64_t n = 0;
  double a = 0.0;  // 3/((n+1)(n-2))
  double p = 0.0;  // n^3/((n+1)^2 (n-2))
  double q = 0.0;  // -ln(p)/a, in (-1, 0)
  double u = 0.0;  // -q - ln(-q) - 1 > 0
};
LambertAux lambert_aux(std::int64_t n);

// Nonzero root of 1 + a(n) gamma = p(n)^gamma (n >= 3).
double gamma_n(std::int64_t n);

// Root of s_n(gamma) = 3 gamma (n-1)/(n+1) t_n^{gamma-1} (n >= 2).
double gamma_tilde_n(std::int64_t n);

// Exponent at which tie_level(n-1) and s_n coincide (n >= 3).
double gamma_n_star(std::int64_t n);

// a_n = 2(n+1) t_n^gamma/(n-1): the -a level where g(e_1) = g(e_n).
// Returns 0 for n = 1.
double tie_level(std::int64_t n, double gamma);

// Derivative of the Goodman curve l(e) = (e(2e-1))^gamma for e > 1/2.
double goodman_derivative(double e, double gamma);

// x_2 = (1 + 1/sqrt(2 gamma - 1))/4: where l' changes monotonicity (gamma > 1/2).
double goodman_derivative_turning_point(double gamma);

}  // namespace ergm
