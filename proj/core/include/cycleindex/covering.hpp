#pragma once

#include <cstddef>
#include <vector>

#include "cycleindex/graph.hpp"

namespace cycleindex {

/// A finite subtree of the universal cover containing every edge of G
/// once, together with the covering map back onto G.
///
/// Built directly from a spanning tree: the vertices of G joined by the
/// tree edges, plus one fresh leaf per non-tree edge (u, v) that copies v
/// and hangs off u. The original copies are the primary representatives.
struct CoverDomain {
  WeightedGraph tree;
  std::vector<std::size_t> phi;                  // V(T) -> V(G)
  std::vector<std::size_t> edge_correspondence;  // E(T) -> E(G)
  std::vector<std::size_t> prim;                 // V(G) -> V(T)
  /// The duplicate vertices of T in column order of Q.
  std::vector<std::size_t> duplicates;
};

CoverDomain build_cover(const WeightedGraph& g, const SpanningTree& t);
CoverDomain build_cover(const WeightedGraph& g);

/// X (N_T x N_G): X[a, v] = 1 iff phi(a) = v.
/// Q (N_T x C): column per duplicate w, -1 at prim(phi(w)) and +1 at w.
struct ProjectionPair {
  IntMatrix x;
  IntMatrix q;
};

ProjectionPair build_projections(const CoverDomain& cover);

/// True iff X^T L_T X equals L_G entrywise within `abs_tol`.
bool laplacian_restriction_check(const WeightedGraph& g,
                                 const CoverDomain& cover,
                                 const ProjectionPair& projections,
                                 double abs_tol = 1e-12);

/// Solves B_T r = q for each column of Q by walking the tree path from
/// the duplicate to its primary representative, then carries r over to
/// the edges of G.
CycleBasis cycle_basis_via_cover(const WeightedGraph& g,
                                 const CoverDomain& cover,
                                 const ProjectionPair& projections);

}  // namespace cycleindex
