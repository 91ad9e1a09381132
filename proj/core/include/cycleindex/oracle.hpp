#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "cycleindex/graph.hpp"
#include "cycleindex/inertia.hpp"

namespace cycleindex::oracle {

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues(i)
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
/// 1e-12 * ||M||_F. Throws NotSymmetric when M deviates from M^T by more
/// than 1e-10 * max(1, max|M_ij|).
EigenDecomposition sym_eigen(const Eigen::MatrixXd& m);

struct RandomGraphSpec {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 10;
  std::size_t min_edges = 1;
  std::size_t max_edges = 20;
  double w_min = 0.1;
  double w_max = 2.0;
  double negative_probability = 0.5;
  std::uint64_t seed = 0;
};

/// Random spanning tree first, then extra edges between non-adjacent
/// pairs. Identical output for identical spec. Throws SpecError when no
/// vertex count in range admits an edge count in range.
WeightedGraph random_connected_graph(const RandomGraphSpec& spec);

/// Draws from an existing generator; used to produce long seeded streams.
WeightedGraph random_connected_graph(const RandomGraphSpec& spec,
                                     std::mt19937_64& rng);

/// Dense Laplacian assembled straight from the edge list, eigensolved with
/// sym_eigen and counted at relative threshold `tol`.
Inertia brute_force_index(const WeightedGraph& g, double tol = kInertiaTol);

Eigen::MatrixXd random_symmetric(std::size_t dim, std::mt19937_64& rng);
Eigen::MatrixXd random_matrix(std::size_t rows, std::size_t cols,
                              std::mt19937_64& rng);

}  // namespace cycleindex::oracle
