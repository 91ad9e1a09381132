#include "cycleindex/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "cycleindex/error.hpp"

namespace cycleindex::oracle {

namespace {

void require_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  }
  if (m.size() == 0) return;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw Error(ErrorCode::NotSymmetric, "asymmetry exceeds 1e-10");
  }
}

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition sym_eigen(const Eigen::MatrixXd& m) {
  require_symmetric(m);
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double target = 1e-12 * a.norm();
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target;
       ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- J^T A J with J the (p, q) rotation.
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i) < a(j, j);
  });
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src);
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

WeightedGraph random_connected_graph(const RandomGraphSpec& spec,
                                     std::mt19937_64& rng) {
  auto edge_range = [&](std::size_t n) {
    const std::size_t lo = std::max(n - 1, spec.min_edges);
    const std::size_t hi = std::min(spec.max_edges, n * (n - 1) / 2);
    return std::pair{lo, hi};
  };
  std::vector<std::size_t> feasible;
  for (std::size_t n = std::max<std::size_t>(spec.min_vertices, 1);
       n <= spec.max_vertices; ++n) {
    const auto [lo, hi] = edge_range(n);
    if (lo <= hi) feasible.push_back(n);
  }
  if (feasible.empty() || spec.w_min < kMinWeight || spec.w_max < spec.w_min) {
    throw Error(ErrorCode::SpecError, "no connected simple graph fits the spec");
  }

  const auto n = feasible[std::uniform_int_distribution<std::size_t>(
      0, feasible.size() - 1)(rng)];
  const auto [lo, hi] = edge_range(n);
  const auto m = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    const auto j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    pairs.emplace_back(perm[i], perm[j]);
    adjacent[perm[i]][perm[j]] = adjacent[perm[j]][perm[i]] = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> spare;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!adjacent[u][v]) spare.emplace_back(u, v);
  std::shuffle(spare.begin(), spare.end(), rng);
  pairs.insert(pairs.end(), spare.begin(),
               spare.begin() + static_cast<std::ptrdiff_t>(m - (n - 1)));
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::uniform_real_distribution<double> magnitude(spec.w_min, spec.w_max);
  std::bernoulli_distribution negative(spec.negative_probability);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    const double w = magnitude(rng);
    edges.push_back({u, v, negative(rng) ? -w : w});
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph random_connected_graph(const RandomGraphSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  return random_connected_graph(spec, rng);
}

Inertia brute_force_index(const WeightedGraph& g, double tol) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.tail);
    const auto v = static_cast<Eigen::Index>(e.head);
    lap(u, v) += e.weight;
    lap(v, u) += e.weight;
    lap(u, u) -= e.weight;
    lap(v, v) -= e.weight;
  }
  return count_inertia(sym_eigen(lap).eigenvalues, tol);
}

Eigen::MatrixXd random_matrix(std::size_t rows, std::size_t cols,
                              std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows),
                    static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = normal(rng);
  return m;
}

Eigen::MatrixXd random_symmetric(std::size_t dim, std::mt19937_64& rng) {
  const Eigen::MatrixXd a = random_matrix(dim, dim, rng);
  return 0.5 * (a + a.transpose());
}

}  // namespace cycleindex::oracle
