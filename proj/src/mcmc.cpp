#include "ergm/mcmc.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <ostream>

#include "ergm/errors.hpp"
#include "ergm/format.hpp"

namespace ergm {
namespace {

constexpr std::int64_t kRecountInterval = 10000;

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

double hamiltonian(std::int64_t edges, std::int64_t triangles, int n, double gamma, double beta1, double beta2) {
  if (n < 1) throw DomainError("hamiltonian: n must be positive");
  const double nn = static_cast<double>(n);
  const double t = 6.0 * static_cast<double>(triangles) / (nn * nn * nn);
  // t^gamma extended continuously by 0 at t = 0.
  const double tg = t == 0.0 ? 0.0 : std::pow(t, gamma);
  return beta1 * 2.0 * static_cast<double>(edges) / (nn * nn) + beta2 * tg;
}

GlauberChain::GlauberChain(int n, double gamma, double beta1, double beta2, std::uint64_t seed)
    : n_(n), gamma_(gamma), beta1_(beta1), beta2_(beta2), words_((static_cast<std::size_t>(n) + 63) / 64), rng_(seed) {
  if (n < 3) throw DomainError("GlauberChain: n must be >= 3");
  if (!(gamma > 0.0)) throw DomainError("GlauberChain: gamma must be positive");
  adj_.assign(static_cast<std::size_t>(n) * words_, 0);
}

bool GlauberChain::has_edge(int i, int j) const {
  return (adj_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1u;
}

int GlauberChain::common_neighbors(int i, int j) const {
  const std::uint64_t* ri = &adj_[static_cast<std::size_t>(i) * words_];
  const std::uint64_t* rj = &adj_[static_cast<std::size_t>(j) * words_];
  int c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(ri[w] & rj[w]);
  return c;
}

double GlauberChain::energy(std::int64_t edges, std::int64_t triangles) const {
  const double nn = static_cast<double>(n_);
  return nn * nn * hamiltonian(edges, triangles, n_, gamma_, beta1_, beta2_);
}

void GlauberChain::set_edge(int i, int j, bool present) {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) throw DomainError("set_edge: invalid vertex pair");
  if (has_edge(i, j) == present) return;
  const int c = common_neighbors(i, j);
  const std::uint64_t bit_j = std::uint64_t{1} << (j % 64);
  const std::uint64_t bit_i = std::uint64_t{1} << (i % 64);
  adj_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] ^= bit_j;
  adj_[static_cast<std::size_t>(j) * words_ + static_cast<std::size_t>(i) / 64] ^= bit_i;
  edges_ += present ? 1 : -1;
  triangles_ += present ? c : -c;
}

double GlauberChain::flip_probability(int i, int j) const {
  const bool present = has_edge(i, j);
  const int c = common_neighbors(i, j);
  const std::int64_t e2 = edges_ + (present ? -1 : 1);
  const std::int64_t t2 = triangles_ + (present ? -c : c);
  return logistic(energy(e2, t2) - energy(edges_, triangles_));
}

bool GlauberChain::step() {
  std::uniform_int_distribution<int> first(0, n_ - 1);
  std::uniform_int_distribution<int> second(0, n_ - 2);
  const int i = first(rng_);
  int j = second(rng_);
  if (j >= i) ++j;
  const double p = flip_probability(i, j);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng_) >= p) return false;
  set_edge(i, j, !has_edge(i, j));
  return true;
}

std::int64_t GlauberChain::recount_triangles() const {
  std::int64_t total = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) total += common_neighbors(i, j);
  return total / 3;
}

SimSummary run(const SimConfig& cfg) {
  if (cfg.n < 3) throw DomainError("run: n must be >= 3");
  if (!(cfg.gamma > 0.0)) throw DomainError("run: gamma must be positive");
  if (cfg.burnin < 0 || cfg.sweeps <= cfg.burnin) throw DomainError("run: need sweeps > burnin >= 0");
  const double beta1 = cfg.a * cfg.beta2 + cfg.b;
  GlauberChain chain(cfg.n, cfg.gamma, beta1, cfg.beta2, cfg.seed);

  const double nn = static_cast<double>(cfg.n);
  const double pairs = nn * (nn - 1.0) / 2.0;
  const auto steps_per_sweep = static_cast<std::int64_t>(pairs);
  SimSummary summary;
  summary.seed = cfg.seed;
  std::int64_t flips = 0;
  std::int64_t steps = 0;
  double sum_e = 0.0;
  double sum_t = 0.0;
  double sum_f = 0.0;
  for (std::int64_t sweep = 1; sweep <= cfg.sweeps; ++sweep) {
    for (std::int64_t s = 0; s < steps_per_sweep; ++s) {
      flips += chain.step() ? 1 : 0;
      ++steps;
      assert(steps % kRecountInterval != 0 || chain.recount_triangles() == chain.triangles());
    }
    const double e = 2.0 * static_cast<double>(chain.edges()) / (nn * nn);
    const double t = 6.0 * static_cast<double>(chain.triangles()) / (nn * nn * nn);
    if (sweep > cfg.burnin) {
      sum_e += e;
      sum_t += t;
      sum_f += static_cast<double>(chain.edges()) / pairs;
    }
    if (cfg.record_trace) summary.trace.push_back({sweep, e, t});
  }
  const double kept = static_cast<double>(cfg.sweeps - cfg.burnin);
  summary.mean_edge_density = sum_e / kept;
  summary.mean_triangle_density = sum_t / kept;
  summary.mean_edge_fraction = sum_f / kept;
  summary.acceptance_rate = static_cast<double>(flips) / static_cast<double>(steps);
  return summary;
}

void write_trace_csv(std::ostream& out, const SimSummary& summary) {
  out << "sweep,edge_density,triangle_density\n";
  for (const TracePoint& p : summary.trace)
    out << p.sweep << ',' << format_real(p.edge_density) << ',' << format_real(p.triangle_density) << '\n';
}

}  // namespace ergm
