#pragma once

// Brute-force enumeration of labeled graphs on n <= 5 vertices and their
// exact Gibbs weights exp(n^2 T_beta). Independent of the sampler code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

struct GraphCounts {
  int edges = 0;
  int triangles = 0;
};

// mask bit p is set when vertex_pairs(n)[p] is an edge.
inline GraphCounts count(int n, std::uint32_t mask) {
  const auto pairs = vertex_pairs(n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  GraphCounts c;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (mask >> p & 1u) {
      adj[pairs[p].first][pairs[p].second] = adj[pairs[p].second][pairs[p].first] = true;
      ++c.edges;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) c.triangles += adj[i][j] && adj[j][k] && adj[i][k];
  return c;
}

// n^2 (beta1 2E/n^2 + beta2 (6T/n^3)^gamma), written out from the model.
inline double log_weight(int n, std::uint32_t mask, double gamma, double beta1, double beta2) {
  const GraphCounts c = count(n, mask);
  const double nn = n;
  const double t = 6.0 * c.triangles / (nn * nn * nn);
  return beta1 * 2.0 * c.edges + nn * nn * beta2 * (t > 0.0 ? std::pow(t, gamma) : 0.0);
}

inline std::vector<double> gibbs_distribution(int n, double gamma, double beta1, double beta2) {
  const std::uint32_t states = 1u << vertex_pairs(n).size();
  std::vector<double> logw(states);
  double top = -INFINITY;
  for (std::uint32_t m = 0; m < states; ++m) top = std::max(top, logw[m] = log_weight(n, m, gamma, beta1, beta2));
  std::vector<double> p(states);
  double z = 0.0;
  for (std::uint32_t m = 0; m < states; ++m) z += p[m] = std::exp(logw[m] - top);
  for (double& x : p) x /= z;
  return p;
}

inline double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

}  // namespace oracle
