#pragma once

// Shared fixtures and brute-force references for the test suites. Nothing
// here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "cycleindex/graph.hpp"
#include "cycleindex/oracle.hpp"

namespace cycleindex::testing {

/// Diamond on vertices 0..3 with edges named
/// a=(0,1) b=(1,2) c=(2,3) d=(0,3) e=(0,2), in that order.
inline WeightedGraph diamond(double a, double b, double c, double d, double e) {
  return WeightedGraph(4, {{0, 1, a}, {1, 2, b}, {2, 3, c}, {0, 3, d}, {0, 2, e}});
}

inline WeightedGraph triangle(double w01, double w12, double w02) {
  return WeightedGraph(3, {{0, 1, w01}, {1, 2, w12}, {0, 2, w02}});
}

inline WeightedGraph path(const std::vector<double>& weights) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < weights.size(); ++i) edges.push_back({i, i + 1, weights[i]});
  return WeightedGraph(weights.size() + 1, std::move(edges));
}

/// Ring with edge i joining i and i+1 (mod n).
inline WeightedGraph ring(const std::vector<double>& weights) {
  const auto n = weights.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, weights[i]});
  return WeightedGraph(n, std::move(edges));
}

/// Two hub vertices joined by three internally disjoint paths of k1, k2
/// and k12 edges. Every edge weighs gamma except the first edge of the
/// shared path, which weighs gamma_e. At most one of the lengths may be 1.
inline WeightedGraph theta_graph(std::size_t k1, std::size_t k2, std::size_t k12,
                                 double gamma, double gamma_e) {
  std::vector<Edge> edges;
  std::size_t next = 2;
  auto add_path = [&](std::size_t len, bool shared) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t to = (i + 1 == len) ? 1 : next++;
      edges.push_back({prev, to, (shared && i == 0) ? gamma_e : gamma});
      prev = to;
    }
  };
  add_path(k1, false);
  add_path(k2, false);
  add_path(k12, true);
  return WeightedGraph(next, std::move(edges));
}

/// Random tree on n vertices with random signs.
inline WeightedGraph random_signed_tree(std::size_t n, std::mt19937_64& rng) {
  oracle::RandomGraphSpec spec;
  spec.min_vertices = spec.max_vertices = n;
  spec.min_edges = spec.max_edges = n - 1;
  return oracle::random_connected_graph(spec, rng);
}

inline double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Bridge test by deletion: e is on a cycle iff removing it keeps its
/// endpoints connected.
inline bool on_some_cycle(const WeightedGraph& g, std::size_t e) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<std::size_t> stack{g.edge(e).tail};
  seen[g.edge(e).tail] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v)) {
      if (nb.edge == e || seen[nb.vertex]) continue;
      seen[nb.vertex] = true;
      stack.push_back(nb.vertex);
    }
  }
  return seen[g.edge(e).head];
}

/// Real rank by a tolerance on singular values; only for small test data.
inline std::size_t numeric_rank(const Eigen::MatrixXd& m, double tol = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.maxCoeff());
  return static_cast<std::size_t>((s.array() > cutoff).count());
}

}  // namespace cycleindex::testing
