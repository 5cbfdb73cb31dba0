#include "ergm/variational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ergm/errors.hpp"

namespace ergm {
namespace {

constexpr double kGridStep = 1e-4;
constexpr int kGridPoints = 10000;
constexpr SegmentIndex kCandidateSegments = 20000;
constexpr double kRefineWidth = 1e-10;
constexpr double kTieTolerance = 1e-12;
constexpr double kRadicalStep = 1e-13;
constexpr int kRadicalIterations = 100000;

void validate(const Objective& obj) {
  if (!(obj.gamma > 0.0)) throw DomainError("objective: gamma must be positive");
  if (obj.direction == Direction::NegativeBeta2) {
    if (obj.s != 3) throw DomainError("objective: the negative limit is only defined for triangles");
  } else if (obj.direction == Direction::PositiveBeta2) {
    if (obj.s < 3) throw DomainError("objective: clique size must be >= 3");
  } else {
    throw DomainError("objective: direction has no edge-density objective");
  }
}

double golden_section(const std::function<double(double)>& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > kRefineWidth) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

Minimizer describe(const Objective& obj, double e, double value) {
  Minimizer m;
  m.e_star = e;
  m.objective_value = value;
  if (e == 0.0) {
    m.kind = MinimizerKind::Zero;
  } else if (e == 1.0) {
    m.kind = MinimizerKind::One;
  } else if (obj.direction == Direction::NegativeBeta2) {
    const SegmentIndex k = segment_of(e);
    m.segment = k;
    if (std::abs(e - turan_edge(k)) <= 1e-12) {
      m.e_star = turan_edge(k);
      m.kind = MinimizerKind::RightEnd;
    } else {
      m.kind = MinimizerKind::Interior;
    }
  } else {
    m.kind = MinimizerKind::Interior;
  }
  return m;
}

// Log of x (x^2 (3k - 2x))^{gamma-1}, the variable part of p(x; k, a, gamma).
double log_radical_lhs(double x, double k, double gamma) {
  return std::log(x) + (gamma - 1.0) * (2.0 * std::log(x) + std::log(3.0 * k - 2.0 * x));
}

}  // namespace

std::vector<double> optimum_locations(const Minimizer& m) {
  std::vector<double> out{m.e_star};
  for (const Minimizer& t : m.tied_with) out.push_back(t.e_star);
  std::sort(out.begin(), out.end());
  return out;
}

double objective_value(const Objective& obj, double e) {
  validate(obj);
  if (!(e >= 0.0 && e <= 1.0)) throw DomainError("objective_value: e must lie in [0, 1]");
  if (obj.direction == Direction::NegativeBeta2) return obj.a * e + lower_boundary(e, obj.gamma);
  return obj.a * e + kruskal_katona(e, obj.s, obj.gamma);
}

double right_derivative(double a, double gamma, SegmentIndex k) {
  if (k < 1) throw DomainError("right_derivative: k must be >= 1");
  if (!(gamma > 0.0)) throw DomainError("right_derivative: gamma must be positive");
  const double kk = static_cast<double>(k);
  return a + 3.0 * kk * gamma / (kk + 1.0) * std::pow(turan_triangle(k), gamma - 1.0);
}

double left_derivative(double a, double gamma, SegmentIndex k) {
  if (k < 2) throw DomainError("left_derivative: k must be >= 2");
  if (!(gamma > 0.0)) throw DomainError("left_derivative: gamma must be positive");
  const double kk = static_cast<double>(k);
  return a + 3.0 * (kk - 1.0) * gamma / (kk + 1.0) * std::pow(turan_triangle(k), gamma - 1.0);
}

InteriorSolution solve_interior(SegmentIndex k, double a, double gamma) {
  if (k < 2) throw DomainError("interior_root: segment index must be >= 2");
  if (!(gamma > 1.0)) throw DomainError("interior_root: gamma must exceed 1");
  if (!(a < 0.0)) throw DomainError("interior_root: a must be negative");
  const double kk = static_cast<double>(k);
  const double m = gamma - 1.0;

  // p(x) = x (x^2 (3k-2x))^{m} - c, with c > 0 assembled in log space.
  const double log_c = std::log(-a) + std::log(kk * (kk + 1.0) / (3.0 * gamma * (kk - 1.0))) +
                       m * std::log(kk * kk * (kk + 1.0) * (kk + 1.0) / (kk - 1.0));
  const auto p_sign = [&](double x) { return log_radical_lhs(x, kk, gamma) - log_c; };

  // g' is largest at the inflection point, so p is too; no sign change there
  // means g is nonincreasing across the convex part of the segment.
  const std::optional<double> infl = inflection_point(k, gamma);
  const double x_lo = infl ? kk * (1.0 + 1.0 / (2.0 * (3.0 * gamma - 2.0))) : kk;
  const double x_hi = kk + 1.0;
  if (!(p_sign(x_lo) > 0.0 && p_sign(x_hi) < 0.0))
    throw DomainError("interior_root: no interior stationary point on this segment");

  InteriorSolution sol;
  const double log_root_c = log_c / m;
  const double exponent = (1.0 - 2.0 * gamma) / m;
  double x = x_hi;
  sol.iterates.push_back(x);
  bool converged = false;
  for (int i = 0; i < kRadicalIterations; ++i) {
    const double next = 1.5 * kk - 0.5 * std::exp(log_root_c + exponent * std::log(x));
    if (!std::isfinite(next) || next <= x_lo) break;
    sol.iterates.push_back(next);
    const double step = std::abs(next - x);
    x = next;
    if (step < kRadicalStep) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    double lo = x_lo;
    double hi = x_hi;
    while (hi - lo > 1e-15 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (p_sign(mid) > 0.0 ? lo : hi) = mid;
    }
    x = 0.5 * (lo + hi);
    sol.used_bisection = true;
  }
  sol.x_star = x;
  const double y = x - kk;
  sol.e_star = (kk * kk - y * y) / (kk * (kk + 1.0));
  return sol;
}

double interior_root(SegmentIndex k, double a, double gamma) { return solve_interior(k, a, gamma).e_star; }

Minimizer grid_minimize(const Objective& obj) {
  validate(obj);
  const bool maximize = obj.direction == Direction::PositiveBeta2;
  const auto f = [&](double e) {
    const double v = objective_value(obj, e);
    return maximize ? -v : v;
  };

  std::vector<double> xs;
  xs.reserve(kGridPoints + kCandidateSegments + 2);
  for (int i = 0; i <= kGridPoints; ++i) xs.push_back(i == kGridPoints ? 1.0 : i * kGridStep);
  if (!maximize) {
    for (SegmentIndex k = 1; k <= kCandidateSegments; ++k) xs.push_back(turan_edge(k));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const std::size_t n = xs.size();
  std::vector<double> fs(n);
  for (std::size_t i = 0; i < n; ++i) fs[i] = f(xs[i]);

  struct Candidate {
    double e;
    double value;
  };
  std::vector<Candidate> optima;
  for (std::size_t i = 0; i < n; ++i) {
    // Strict on the left so a flat run contributes only its first point.
    const bool left_ok = i == 0 || fs[i] < fs[i - 1];
    const bool right_ok = i + 1 == n || fs[i] <= fs[i + 1];
    if (!left_ok || !right_ok) continue;
    Candidate best{xs[i], fs[i]};
    const double lo = xs[i == 0 ? 0 : i - 1];
    const double hi = xs[i + 1 == n ? n - 1 : i + 1];
    const double refined = golden_section(f, lo, hi);
    const double refined_value = f(refined);
    if (refined_value < best.value) best = {refined, refined_value};
    optima.push_back(best);
  }

  const auto best_it = std::min_element(optima.begin(), optima.end(),
                                        [](const Candidate& l, const Candidate& r) { return l.value < r.value; });
  const double sign = maximize ? -1.0 : 1.0;
  Minimizer result = describe(obj, best_it->e, sign * best_it->value);
  const double tol = std::max(kTieTolerance * std::abs(best_it->value), 1e-300);
  for (const Candidate& c : optima) {
    if (&c == &*best_it || std::abs(c.e - best_it->e) < 1e-7) continue;
    if (std::abs(c.value - best_it->value) <= tol)
      result.tied_with.push_back(describe(obj, c.e, sign * c.value));
  }
  return result;
}

Minimizer positive_limit_argmax(int s, double gamma, double a) {
  if (s < 3) throw DomainError("positive_limit_argmax: clique size must be >= 3");
  if (!(gamma > 0.0)) throw DomainError("positive_limit_argmax: gamma must be positive");
  const Objective obj{a, gamma, s, Direction::PositiveBeta2};
  const double sg = s * gamma;
  const auto at = [&](double e) { return describe(obj, e, objective_value(obj, e)); };
  if (sg >= 2.0) {
    if (std::abs(a + 1.0) <= 1e-12) {
      Minimizer m = at(0.0);
      m.tied_with.push_back(at(1.0));
      return m;
    }
    return at(a < -1.0 ? 0.0 : 1.0);
  }
  if (a >= -sg / 2.0) return at(1.0);
  return at(std::pow(-2.0 * a / sg, 2.0 / (sg - 2.0)));
}

}  // namespace ergm
