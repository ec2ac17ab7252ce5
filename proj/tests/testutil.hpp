#pragma once

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ppr/exact_ppr.hpp"
#include "ppr/graph.hpp"
#include "ppr/types.hpp"

namespace ppr::test {

// The five-node running-example graph: 0 -> {1,2}, 1 -> {0,2,3,4},
// 2 -> {1,3}, 3 -> {0,1,2}, 4 -> {1,2}. n = 5, m = 13, no dead ends.
inline Graph five_node_graph() {
  return build_graph_from_edges({{0, 1}, {0, 2},
                                 {1, 0}, {1, 2}, {1, 3}, {1, 4},
                                 {2, 1}, {2, 3},
                                 {3, 0}, {3, 1}, {3, 2},
                                 {4, 1}, {4, 2}});
}

// Exact PPR of the five-node graph for source 0, alpha = 0.2, frozen from an
// independent dense solve of the linear system.
inline const std::vector<double>& five_node_pi0() {
  static const std::vector<double> values = {
      0.29366106080206994, 0.27166882276843485, 0.23285899094437276,
      0.1474773609314361, 0.054333764553686985};
  return values;
}

// Dense transition matrix with the dead-end rows jumping to `source`;
// row-major n x n. Test-side route, independent of the engines.
inline std::vector<double> dense_transition(const Graph& g, NodeId source) {
  const std::size_t n = g.n();
  std::vector<double> p(n * n, 0.0);
  for (NodeId v = 0; v < g.n(); ++v) {
    const auto out = effective_out(g, v, source);
    const double share = 1.0 / static_cast<double>(out.degree());
    for (NodeId u : out) p[static_cast<std::size_t>(v) * n + u] += share;
  }
  return p;
}

// row vector x <- x * P
inline std::vector<double> vec_times_matrix(const std::vector<double>& x,
                                            const std::vector<double>& p) {
  const std::size_t n = x.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    if (x[v] == 0.0) continue;
    for (std::size_t u = 0; u < n; ++u) y[u] += x[v] * p[v * n + u];
  }
  return y;
}

inline double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return total;
}

inline double linf_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline std::string temp_path(const std::string& name) {
  return std::string("/tmp/ppr_test_") + std::to_string(::getpid()) + "_" + name;
}

}  // namespace ppr::test
