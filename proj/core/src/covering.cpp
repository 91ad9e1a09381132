#include "cycleindex/covering.hpp"

#include <numeric>
#include <utility>

#include "cycleindex/spectral.hpp"

namespace cycleindex {

CoverDomain build_cover(const WeightedGraph& g, const SpanningTree& t) {
  const auto n = g.num_vertices();
  CoverDomain cover;
  cover.phi.resize(n);
  std::iota(cover.phi.begin(), cover.phi.end(), std::size_t{0});
  cover.prim = cover.phi;

  std::vector<bool> is_tree_edge(g.num_edges(), false);
  for (auto e : t.tree_edges) is_tree_edge[e] = true;

  // Edges of T keep the edge order of G, so the correspondence is the
  // identity and orientations carry over.
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    if (is_tree_edge[e]) {
      edges.push_back(edge);
    } else {
      const auto leaf = cover.phi.size();
      cover.phi.push_back(edge.head);
      cover.duplicates.push_back(leaf);
      edges.push_back({edge.tail, leaf, edge.weight});
    }
    cover.edge_correspondence.push_back(e);
  }
  cover.tree = WeightedGraph(cover.phi.size(), std::move(edges));
  return cover;
}

CoverDomain build_cover(const WeightedGraph& g) {
  return build_cover(g, spanning_tree(g));
}

ProjectionPair build_projections(const CoverDomain& cover) {
  const auto n_t = static_cast<Eigen::Index>(cover.phi.size());
  const auto n_g = static_cast<Eigen::Index>(cover.prim.size());
  ProjectionPair out;
  out.x = IntMatrix::Zero(n_t, n_g);
  for (Eigen::Index a = 0; a < n_t; ++a) {
    out.x(a, static_cast<Eigen::Index>(cover.phi[static_cast<std::size_t>(a)])) = 1;
  }
  out.q = IntMatrix::Zero(n_t, static_cast<Eigen::Index>(cover.duplicates.size()));
  for (std::size_t j = 0; j < cover.duplicates.size(); ++j) {
    const auto w = cover.duplicates[j];
    const auto col = static_cast<Eigen::Index>(j);
    out.q(static_cast<Eigen::Index>(cover.prim[cover.phi[w]]), col) = -1;
    out.q(static_cast<Eigen::Index>(w), col) = 1;
  }
  return out;
}

bool laplacian_restriction_check(const WeightedGraph& g,
                                 const CoverDomain& cover,
                                 const ProjectionPair& projections,
                                 double abs_tol) {
  const Eigen::MatrixXd x = projections.x.cast<double>();
  const Eigen::MatrixXd projected = x.transpose() * laplacian(cover.tree) * x;
  const Eigen::MatrixXd direct = laplacian(g);
  if (projected.rows() != direct.rows() || projected.cols() != direct.cols()) {
    return false;
  }
  return direct.size() == 0 ||
         (projected - direct).cwiseAbs().maxCoeff() <= abs_tol;
}

CycleBasis cycle_basis_via_cover(const WeightedGraph& g,
                                 const CoverDomain& cover,
                                 const ProjectionPair& projections) {
  const auto& tree = cover.tree;
  const auto walk = spanning_tree(tree);
  const auto cols = projections.q.cols();

  CycleBasis basis;
  basis.cycles = IntMatrix::Zero(static_cast<Eigen::Index>(g.num_edges()), cols);
  basis.weights.resize(static_cast<Eigen::Index>(g.num_edges()));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    basis.weights(static_cast<Eigen::Index>(e)) = g.edge(e).weight;
  }

  for (Eigen::Index j = 0; j < cols; ++j) {
    std::size_t from = 0;
    std::size_t to = 0;
    for (Eigen::Index a = 0; a < projections.q.rows(); ++a) {
      if (projections.q(a, j) == 1) from = static_cast<std::size_t>(a);
      if (projections.q(a, j) == -1) to = static_cast<std::size_t>(a);
    }
    // r_e = +1 when the path from -> to runs along the orientation of e.
    auto add = [&](std::size_t tree_edge, int sign) {
      const auto ge = static_cast<Eigen::Index>(cover.edge_correspondence[tree_edge]);
      basis.cycles(ge, j) += sign;
    };
    auto up_sign = [&](std::size_t v) {
      return tree.edge(walk.parent_edge[v]).tail == v ? 1 : -1;
    };
    while (walk.depth[from] > walk.depth[to]) {
      add(walk.parent_edge[from], up_sign(from));
      from = walk.parent[from];
    }
    while (walk.depth[to] > walk.depth[from]) {
      add(walk.parent_edge[to], -up_sign(to));
      to = walk.parent[to];
    }
    while (from != to) {
      add(walk.parent_edge[from], up_sign(from));
      from = walk.parent[from];
      add(walk.parent_edge[to], -up_sign(to));
      to = walk.parent[to];
    }
  }
  return basis;
}

}  // namespace cycleindex
