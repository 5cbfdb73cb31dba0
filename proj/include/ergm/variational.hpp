#pragma once

#include <optional>
#include <vector>

#include "ergm/curves.hpp"

namespace ergm {

// Direction in which beta_2 (or beta_1) diverges. Only the first two give a
// one-dimensional variational problem over edge density.
enum class Direction { NegativeBeta2, PositiveBeta2, HorizontalPlus, HorizontalMinus, Vertical };

struct Objective {
  double a = 0.0;
  double gamma = 1.0;
  int s = 3;
  Direction direction = Direction::NegativeBeta2;
};

enum class MinimizerKind { LeftEnd, RightEnd, Interior, Zero, One };

struct Minimizer {
  double e_star = 0.0;
  std::optional<SegmentIndex> segment;
  MinimizerKind kind = MinimizerKind::Interior;
  double objective_value = 0.0;
  // Other optima whose objective value ties with this one.
  std::vector<Minimizer> tied_with;
};

// Edge densities of the minimizer and everything tied with it, ascending.
std::vector<double> optimum_locations(const Minimizer& m);

// g(e) = a e + r(e)^gamma (NegativeBeta2) or a e + e^{s gamma/2} (PositiveBeta2).
double objective_value(const Objective& obj, double e);

// One-sided derivatives of g(e) = a e + r(e)^gamma at the Turan point e_k.
double right_derivative(double a, double gamma, SegmentIndex k);
double left_derivative(double a, double gamma, SegmentIndex k);

struct InteriorSolution {
  double e_star = 0.0;
  double x_star = 0.0;           // k + sqrt(k(k - e(k+1))) at e_star
  std::vector<double> iterates;  // nested-radical sequence x_1 = k+1, x_2, ...
  bool used_bisection = false;
};

// Stationary point of g on segment k (k >= 2, gamma > 1, a < 0) lying left of
// the inflection point. Throws DomainError when g' has no such zero.
InteriorSolution solve_interior(SegmentIndex k, double a, double gamma);
double interior_root(SegmentIndex k, double a, double gamma);

// Brute-force optimum of the objective over [0, 1]: minimum for
// NegativeBeta2, maximum for PositiveBeta2.
Minimizer grid_minimize(const Objective& obj);

// Closed-form maximizer of a e + e^{s gamma/2} over [0, 1].
Minimizer positive_limit_argmax(int s, double gamma, double a);

}  // namespace ergm
