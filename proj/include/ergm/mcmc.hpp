#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace ergm {

struct SimConfig {
  int n = 3;
  double gamma = 1.0;
  double beta2 = 0.0;
  double a = 0.0;  // beta1 = a * beta2 + b
  double b = 0.0;
  std::int64_t sweeps = 1000;
  std::int64_t burnin = 100;
  std::uint64_t seed = 1;
  bool record_trace = false;
};

struct TracePoint {
  std::int64_t sweep = 0;
  double edge_density = 0.0;
  double triangle_density = 0.0;
};

struct SimSummary {
  double mean_edge_density = 0.0;      // 2|E|/n^2
  double mean_triangle_density = 0.0;  // 6|T|/n^3
  double mean_edge_fraction = 0.0;     // |E|/C(n,2)
  double acceptance_rate = 0.0;        // fraction of steps that flipped the pair
  std::uint64_t seed = 0;
  std::vector<TracePoint> trace;
};

// T_beta = beta1 * 2 edges/n^2 + beta2 * (6 triangles/n^3)^gamma.
double hamiltonian(std::int64_t edges, std::int64_t triangles, int n, double gamma, double beta1, double beta2);

// Single-edge heat-bath chain targeting exp(n^2 T_beta(G)). Adjacency rows
// are bitsets; the triangle count is maintained incrementally.
class GlauberChain {
 public:
  GlauberChain(int n, double gamma, double beta1, double beta2, std::uint64_t seed);

  // One update at a uniformly random pair; returns true if the pair flipped.
  bool step();
  // Probability that an update at pair (i, j) flips it from the current state.
  double flip_probability(int i, int j) const;

  bool has_edge(int i, int j) const;
  void set_edge(int i, int j, bool present);

  int vertices() const { return n_; }
  std::int64_t edges() const { return edges_; }
  std::int64_t triangles() const { return triangles_; }
  std::int64_t recount_triangles() const;

 private:
  int common_neighbors(int i, int j) const;
  double energy(std::int64_t edges, std::int64_t triangles) const;

  int n_;
  double gamma_;
  double beta1_;
  double beta2_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
  std::int64_t edges_ = 0;
  std::int64_t triangles_ = 0;
  std::mt19937_64 rng_;
};

SimSummary run(const SimConfig& cfg);

void write_trace_csv(std::ostream& out, const SimSummary& summary);

}  // namespace ergm
