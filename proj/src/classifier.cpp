#include "ergm/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "ergm/criticals.hpp"
#include "ergm/curves.hpp"
#include "ergm/errors.hpp"

namespace ergm {
namespace {

constexpr double kCriticalTolerance = 1e-12;
constexpr double kCertifyTolerance = 1e-4;
// Largest segment index any scan will consider.
constexpr SegmentIndex kMaxSegment = SegmentIndex{1} << 50;

// Relative: at large gamma every s_k is far below 1, and an absolute floor
// would merge them all.
bool approx_eq(double x, double y) { return std::abs(x - y) <= kCriticalTolerance * std::max(std::abs(x), std::abs(y)); }
bool at_least(double x, double y) { return x > y || approx_eq(x, y); }

GraphonDescriptor turan(SegmentIndex classes) { return TuranGraphon{classes, 1.0}; }

GraphonDescriptor interior(SegmentIndex k, double a, double gamma) {
  const double e = interior_root(k, a, gamma);
  return InteriorGraphon{k, e, razborov(k, e)};
}

LimitSet make_set(std::vector<GraphonDescriptor> members) {
  std::stable_sort(members.begin(), members.end(), [](const GraphonDescriptor& l, const GraphonDescriptor& r) {
    return edge_density(l) < edge_density(r);
  });
  return LimitSet{std::move(members)};
}

LimitSet break_ties(const LimitSet& candidates, double b) {
  if (candidates.members.size() <= 1 || std::abs(b) <= kCriticalTolerance) return candidates;
  return LimitSet{{b > 0.0 ? candidates.members.back() : candidates.members.front()}};
}

struct Outcome {
  LimitSet candidates;
  std::string regime;
};

// Least k >= start with s_k >= c, assuming s is increasing from start on.
SegmentIndex first_slope_at_least(double gamma, SegmentIndex start, double c) {
  const auto reached = [&](SegmentIndex k) { return at_least(slope(k, gamma), c); };
  if (reached(start)) return start;
  SegmentIndex lo = start;
  SegmentIndex step = 1;
  SegmentIndex hi = start + step;
  while (!reached(hi)) {
    lo = hi;
    step *= 2;
    hi = start + step;
    if (hi > kMaxSegment) return 0;
  }
  while (hi - lo > 1) {
    const SegmentIndex mid = lo + (hi - lo) / 2;
    (reached(mid) ? hi : lo) = mid;
  }
  return hi;
}

[[noreturn]] void unclassified(const ParamPoint& p, const std::string& regime, const std::string& why) {
  const Objective obj{p.a, p.gamma, 3, Direction::NegativeBeta2};
  throw UnclassifiedRegion("unclassified parameter region: " + why, grid_minimize(obj), regime);
}

// Comparison of the Turan point e_1 against the complete graphon: g(e_1) = a/2,
// g(1) = a + 1, equal at a = -2.
LimitSet minus_two_comparison(double a) {
  if (approx_eq(a, -2.0)) return make_set({turan(2), CompleteGraphon{}});
  return make_set({a > -2.0 ? turan(2) : GraphonDescriptor{CompleteGraphon{}}});
}

// First index of the increasing tail of s_k when s first decreases and then
// increases. The tail starts where p_k > x_2; every k with e_{k-1} >= x_2
// qualifies, and the turning point is at most a couple of indices before.
SegmentIndex increasing_branch_start(double gamma) {
  const double x2 = goodman_derivative_turning_point(gamma);
  const double guess = x2 / (1.0 - x2);
  if (!(guess < static_cast<double>(kMaxSegment))) return 0;
  const SegmentIndex sure = static_cast<SegmentIndex>(std::ceil(1.0 / (1.0 - x2)));
  SegmentIndex k = std::max<SegmentIndex>(3, static_cast<SegmentIndex>(std::floor(guess)) - 1);
  for (; k < sure; ++k) {
    if (slope(k + 1, gamma) > slope(k, gamma)) return k;
  }
  return std::max<SegmentIndex>(3, sure);
}

// Between the two Goodman-derivative landmarks for 5/9 < gamma <= log_{27/16}(3/2):
// n is the least index on the increasing tail of s with c <= s_n.
LimitSet turan_scan(const ParamPoint& p, const std::string& regime) {
  const double gamma = p.gamma;
  const double c = -p.a;
  const SegmentIndex start = increasing_branch_start(gamma);
  if (start == 0) unclassified(p, regime, "increasing slope tail beyond scan range");
  const SegmentIndex n = first_slope_at_least(gamma, start, c);
  if (n == 0) unclassified(p, regime, "slope index beyond scan range");
  const double sn = slope(n, gamma);
  const double level = tie_level(n - 1, gamma);
  const double g_star = gamma_n_star(n);
  if (approx_eq(gamma, g_star)) {
    if (approx_eq(c, sn)) return make_set({turan(2), turan(n), turan(n + 1)});
    return make_set({turan(2)});
  }
  if (gamma > g_star) {
    if (approx_eq(c, level)) return make_set({turan(2), turan(n)});
    if (c < level) return make_set({turan(2)});
    if (approx_eq(c, sn)) return make_set({turan(n), turan(n + 1)});
    return make_set({turan(n)});
  }
  return make_set({turan(2)});
}

Outcome classify_mid_range(const ParamPoint& p) {
  const double gamma = p.gamma;
  const double c = -p.a;
  const double g_star = gamma_star();
  const double s2 = slope(2, gamma);
  const double l_x2 = goodman_derivative(goodman_derivative_turning_point(gamma), gamma);
  if (approx_eq(gamma, g_star)) {
    const std::string regime = "gamma=gamma*";
    if (!(c > l_x2) || approx_eq(c, l_x2)) return {make_set({turan(2)}), regime};
    if (at_least(c, s2)) return {make_set({CompleteGraphon{}}), regime};
    return {turan_scan(p, regime), regime};
  }
  if (gamma < g_star) {
    const std::string regime = "5/9<gamma<gamma*";
    if (!(c > l_x2) || approx_eq(c, l_x2)) return {make_set({turan(2)}), regime};
    if (at_least(c, s2)) return {make_set({CompleteGraphon{}}), regime};
    if (at_least(c, 3.0 * gamma)) return {minus_two_comparison(p.a), regime};
    return {turan_scan(p, regime), regime};
  }
  const std::string regime = "gamma*<gamma<=log_27/16(3/2)";
  if (!(c > l_x2) || approx_eq(c, l_x2)) return {make_set({turan(2)}), regime};
  if (at_least(c, 3.0 * gamma)) return {make_set({CompleteGraphon{}}), regime};
  return {turan_scan(p, regime), regime};
}

Outcome classify_up_to_one(const ParamPoint& p) {
  const std::string regime = "log_27/16(3/2)<gamma<=1";
  const double gamma = p.gamma;
  const double c = -p.a;
  if (at_least(c, 3.0 * gamma)) return {make_set({CompleteGraphon{}}), regime};
  if (c < slope(2, gamma) && !approx_eq(c, slope(2, gamma))) return {make_set({turan(2)}), regime};
  const SegmentIndex n = first_slope_at_least(gamma, 2, c);
  if (n == 0) unclassified(p, regime, "slope index beyond scan range");
  if (approx_eq(c, slope(n, gamma))) return {make_set({turan(n), turan(n + 1)}), regime};
  return {make_set({turan(n)}), regime};
}

Outcome classify_above_one(const ParamPoint& p) {
  const std::string regime = "gamma>1";
  const double gamma = p.gamma;
  const double a = p.a;
  const double c = -a;
  const double s2 = slope(2, gamma);
  // For gamma > 1 the right derivative at e_1 is a < 0, so e_1 is never a
  // local minimum; below s_2 the chord slopes keep every later Turan point
  // higher and the minimum sits inside segment 2.
  if (c < s2 || approx_eq(c, s2)) return {make_set({interior(2, a, gamma)}), regime};
  if (at_least(c, 3.0 * gamma)) return {make_set({CompleteGraphon{}}), regime};

  const SegmentIndex upper = first_slope_at_least(gamma, 2, c);
  if (upper == 0) unclassified(p, regime, "slope index beyond scan range");
  if (approx_eq(c, slope(upper, gamma))) {
    // Chord slope of segment N equals c: g(e_{N-1}) = g(e_N).
    const SegmentIndex big_n = upper;
    const double nn = static_cast<double>(big_n);
    if (gamma <= (nn + 4.0) / 6.0 || gamma < gamma_n(big_n) || approx_eq(gamma, gamma_n(big_n)))
      return {make_set({turan(big_n), turan(big_n + 1)}), regime};
    return {make_set({interior(big_n, a, gamma)}), regime};
  }

  // s_n < c < s_{n+1}.
  const SegmentIndex n = upper - 1;
  const double nn = static_cast<double>(n);
  if (gamma <= (nn + 4.0) / 6.0) return {make_set({turan(n + 1)}), regime};
  const double tpow = std::pow(turan_triangle(n), gamma - 1.0);
  const double left = 3.0 * gamma * (nn - 1.0) / (nn + 1.0) * tpow;
  const double mid = gamma * (3.0 * nn - 1.0) / (nn + 1.0) * tpow;
  const double right = 3.0 * gamma * nn / (nn + 1.0) * tpow;
  if (gamma > gamma_tilde_n(n) && (c < left || approx_eq(c, left))) return {make_set({interior(n, a, gamma)}), regime};
  if (at_least(c, mid) && (c < right || approx_eq(c, right))) return {make_set({turan(n + 1)}), regime};
  if (gamma > gamma_n(n + 1) && c > right) return {make_set({interior(n + 1, a, gamma)}), regime};
  unclassified(p, regime, "-a lies between the interior and Turan ranges");
}

Outcome classify_negative(const ParamPoint& p) {
  if (p.clique_s != 3) throw DomainError("classify: the negative limit is only available for triangles");
  const double gamma = p.gamma;
  if (p.a >= 0.0) return {make_set({EmptyGraphon{}}), "a>=0"};
  if (gamma < 5.0 / 9.0 || approx_eq(gamma, 5.0 / 9.0)) return {minus_two_comparison(p.a), "gamma<=5/9"};
  const double g_l = slope_increasing_threshold();
  if (gamma < g_l || approx_eq(gamma, g_l)) return classify_mid_range(p);
  if (gamma < 1.0 || approx_eq(gamma, 1.0)) return classify_up_to_one(p);
  return classify_above_one(p);
}

LimitSet positive_candidates(int s, double gamma, double a) {
  const double sg = s * gamma;
  if (sg >= 2.0) {
    if (approx_eq(a, -1.0)) return make_set({EmptyGraphon{}, CompleteGraphon{}});
    return make_set({a < -1.0 ? GraphonDescriptor{EmptyGraphon{}} : GraphonDescriptor{CompleteGraphon{}}});
  }
  if (a >= -sg / 2.0) return make_set({CompleteGraphon{}});
  return make_set({BoxGraphon{std::pow(-2.0 * a / sg, 1.0 / (sg - 2.0))}});
}

// Matching sets agree. A strict subset also agrees: the grid reports ties
// only to relative precision 1e-12, which cannot separate neighbouring Turan
// points once s_k is that close to -a.
bool agrees_with_oracle(const std::vector<double>& candidates, const std::vector<double>& oracle) {
  if (set_distance(candidates, oracle) <= kCertifyTolerance) return true;
  if (candidates.empty()) return false;
  return std::all_of(candidates.begin(), candidates.end(), [&](double e) {
    return std::any_of(oracle.begin(), oracle.end(), [&](double o) { return std::abs(o - e) <= kCertifyTolerance; });
  });
}

void validate(const ParamPoint& p) {
  if (p.direction == Direction::Vertical) {
    if (!p.beta1 || !std::isfinite(*p.beta1)) throw DomainError("classify: vertical direction requires beta1");
    if (!p.chromatic_r || *p.chromatic_r < 2) throw DomainError("classify: vertical direction requires r >= 2");
    return;
  }
  if (p.direction == Direction::HorizontalPlus || p.direction == Direction::HorizontalMinus) return;
  if (!(p.gamma > 0.0) || !std::isfinite(p.gamma)) throw DomainError("classify: gamma must be positive");
  if (!std::isfinite(p.a) || !std::isfinite(p.b)) throw DomainError("classify: a and b must be finite");
  if (p.clique_s < 3) throw DomainError("classify: clique size must be >= 3");
}

}  // namespace

double edge_density(const GraphonDescriptor& g) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, EmptyGraphon>) return 0.0;
        else if constexpr (std::is_same_v<T, CompleteGraphon>) return 1.0;
        else if constexpr (std::is_same_v<T, TuranGraphon>) return d.scale * turan_edge(d.k - 1);
        else if constexpr (std::is_same_v<T, BoxGraphon>) return d.side * d.side;
        else return d.e_star;
      },
      g);
}

double triangle_density(const GraphonDescriptor& g) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, EmptyGraphon>) return 0.0;
        else if constexpr (std::is_same_v<T, CompleteGraphon>) return 1.0;
        else if constexpr (std::is_same_v<T, TuranGraphon>) return d.scale * d.scale * d.scale * turan_triangle(d.k - 1);
        else if constexpr (std::is_same_v<T, BoxGraphon>) return d.side * d.side * d.side;
        else return d.t_star;
      },
      g);
}

std::string kind_name(const GraphonDescriptor& g) {
  static const char* const names[] = {"empty", "complete", "turan", "box", "interior"};
  return names[g.index()];
}

bool operator==(const GraphonDescriptor& l, const GraphonDescriptor& r) {
  if (l.index() != r.index()) return false;
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        const T& o = std::get<T>(r);
        if constexpr (std::is_same_v<T, TuranGraphon>) return d.k == o.k && d.scale == o.scale;
        else if constexpr (std::is_same_v<T, BoxGraphon>) return d.side == o.side;
        else if constexpr (std::is_same_v<T, InteriorGraphon>)
          return d.segment == o.segment && d.e_star == o.e_star && d.t_star == o.t_star;
        else return true;
      },
      l);
}

std::vector<double> edge_densities(const LimitSet& set) {
  std::vector<double> out;
  for (const auto& m : set.members) out.push_back(edge_density(m));
  std::sort(out.begin(), out.end());
  return out;
}

double set_distance(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.empty() || y.empty()) return x.empty() && y.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  const auto directed = [](const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double u : from) {
      double best = std::numeric_limits<double>::infinity();
      for (double v : to) best = std::min(best, std::abs(u - v));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(x, y), directed(y, x));
}

LimitSet classify_clique_positive(int s, double gamma, double a, double b) {
  if (s < 3) throw DomainError("classify_clique_positive: clique size must be >= 3");
  if (!(gamma > 0.0)) throw DomainError("classify_clique_positive: gamma must be positive");
  return break_ties(positive_candidates(s, gamma, a), b);
}

Classification classify(const ParamPoint& p, const ClassifyOptions& options) {
  validate(p);
  Classification out;
  switch (p.direction) {
    case Direction::HorizontalPlus:
      out.candidates = make_set({CompleteGraphon{}});
      out.regime = "beta1->+inf";
      break;
    case Direction::HorizontalMinus:
      out.candidates = make_set({EmptyGraphon{}});
      out.regime = "beta1->-inf";
      break;
    case Direction::Vertical: {
      // Logistic weight e^{2 beta1}/(1 + e^{2 beta1}).
      const double scale = 1.0 / (1.0 + std::exp(-2.0 * *p.beta1));
      const int r = *p.chromatic_r;
      if (r == 2 || scale == 0.0) out.candidates = make_set({EmptyGraphon{}});
      else out.candidates = make_set({TuranGraphon{r - 1, scale}});
      out.regime = "vertical";
      break;
    }
    case Direction::PositiveBeta2:
      out.candidates = positive_candidates(p.clique_s, p.gamma, p.a);
      out.regime = p.clique_s * p.gamma >= 2.0 ? "positive,s*gamma>=2" : "positive,s*gamma<2";
      break;
    case Direction::NegativeBeta2: {
      Outcome o = classify_negative(p);
      out.candidates = std::move(o.candidates);
      out.regime = std::move(o.regime);
      break;
    }
  }
  out.limit = break_ties(out.candidates, p.b);
  if (options.certify && (p.direction == Direction::NegativeBeta2 || p.direction == Direction::PositiveBeta2)) {
    out.oracle = grid_minimize(Objective{p.a, p.gamma, p.clique_s, p.direction});
    out.certified = agrees_with_oracle(edge_densities(out.candidates), optimum_locations(*out.oracle));
  }
  return out;
}

std::vector<PhaseRow> phase_sweep(double gamma, std::span<const double> a_grid, double b, unsigned threads,
                                  const ClassifyOptions& options) {
  if (a_grid.empty()) throw DomainError("phase_sweep: empty grid");
  std::vector<double> grid(a_grid.begin(), a_grid.end());
  std::sort(grid.begin(), grid.end());
  std::vector<PhaseRow> rows(grid.size());
  const auto work = [&](std::size_t i) {
    PhaseRow& row = rows[i];
    row.a = grid[i];
    try {
      row.result = classify(ParamPoint{gamma, grid[i], b, Direction::NegativeBeta2, {}, {}, 3}, options);
    } catch (const UnclassifiedRegion& e) {
      row.unclassified_oracle = e.oracle();
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
    return rows;
  }
  // Strided assignment; each row is written by exactly one thread.
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < grid.size(); i += threads) work(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace ergm
