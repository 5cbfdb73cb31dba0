#pragma once

#include <cstdint>
#include <optional>

namespace ergm {

// Index of a Razborov segment r_k, defined on I_k = [e_{k-1}, e_k].
using SegmentIndex = std::int64_t;

// Turan landmark v_k = (e_k, t_k): the edge and triangle densities of the
// Turan graphon with k + 1 classes.
struct TuranPoint {
  std::int64_t k = 0;
  double e = 0.0;
  double t = 0.0;
};

double turan_edge(std::int64_t k);      // k/(k+1)
double turan_triangle(std::int64_t k);  // k(k-1)/(k+1)^2
TuranPoint turan_point(std::int64_t k);

// Segment owning e under the lower-index convention at shared endpoints:
// e in (e_{k-1}, e_k] maps to k, and e = 0 maps to 1. Requires e in [0, 1).
SegmentIndex segment_of(double e);

// Razborov lower bound r_k(e) on the triangle density for e in I_k.
double razborov(SegmentIndex k, double e);

// r(e)^gamma: the Razborov curve raised to gamma, for e in [0, 1].
double lower_boundary(double e, double gamma);

// l(e) = max(0, e(2e-1))^gamma.
double goodman(double e, double gamma);

// e^{s gamma / 2}, the clique upper bound raised to gamma.
double kruskal_katona(double e, int s, double gamma);

// Asymptotic K_s density lower bound g_s on I_t; coincides with r_t for s = 3.
// Requires e in I_t and e >= 1 - 1/(s-1).
double clique_lower_bound(int s, std::int64_t t, double e);

// Point where r_k^gamma switches from concave to convex, if it exists
// (gamma > (4+k)/6).
std::optional<double> inflection_point(SegmentIndex k, double gamma);

}  // namespace ergm
