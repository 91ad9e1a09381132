#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Core>

#include "cycleindex/graph.hpp"
#include "cycleindex/inertia.hpp"

namespace cycleindex {

/// Off-diagonal entries are the edge weights and each diagonal entry is
/// minus the incident weight sum, so L * 1 = 0 and L = -B D B^T.
/// A graph with only positive weights has a negative semidefinite L.
Eigen::MatrixXd laplacian(const WeightedGraph& g);

/// Cycle intersection form Z = -Y^T D^-1 Y of a cycle basis.
struct CycleForm {
  Eigen::MatrixXd z;
  CycleBasis basis;
};

CycleForm cycle_form(const CycleBasis& basis);

/// Index of the Laplacian obtained from the cycle form:
/// n+(L) = #negative edges - n+(Z) - n0(Z), n0(L) = 1 + n0(Z). The n0(Z)
/// term only matters when Z is singular.
struct CycleIndex {
  Inertia laplacian;
  Inertia cycle_form;
  std::size_t negative_edges = 0;
  std::size_t cycle_rank = 0;
  /// Set when the Laplacian kernel is larger than span(1).
  bool degenerate = false;
};

/// Throws NotConnected.
CycleIndex index_via_cycles(const WeightedGraph& g, double tol = kInertiaTol);
CycleIndex index_via_cycles(const WeightedGraph& g, const CycleBasis& basis,
                            double tol = kInertiaTol);

struct IndexBounds {
  std::size_t lower = 0;  // components(G+) - 1
  std::size_t upper = 0;  // |V| - components(G-)
};

IndexBounds index_bounds(const WeightedGraph& g);

/// Cycle basis split into cycles of the positive subgraph, cycles of the
/// negative subgraph, and a greedy completion by mixed fundamental cycles.
/// Block names follow the partitioned form
///
///   Z = [ A_M      B_+  B_- ]
///       [ B_+^T    Z_+  0   ]
///       [ B_-^T    0    Z_- ]
struct MixedCyclePartition {
  IntMatrix mixed_cycles;
  IntMatrix plus_cycles;
  IntMatrix minus_cycles;
  Eigen::MatrixXd a_mixed;
  Eigen::MatrixXd b_plus;
  Eigen::MatrixXd b_minus;
  Eigen::MatrixXd z_plus;
  Eigen::MatrixXd z_minus;
  /// Full form in the order mixed | plus | minus.
  Eigen::MatrixXd z;
};

struct MixedCycleReduction {
  MixedCyclePartition partition;
  Eigen::MatrixXd schur_complement;
  /// dim(S-) + n+(schur complement).
  std::size_t n_plus_reduced = 0;
  /// n+(Z) computed on the whole partitioned form.
  std::size_t n_plus_direct = 0;
};

MixedCycleReduction mixed_cycle_reduction(const WeightedGraph& g,
                                          double tol = kInertiaTol);

/// Determinant of M restricted to the orthogonal complement of
/// `kernel`, via an orthonormal basis P of that complement: det(P^T M P).
double restricted_determinant(const Eigen::MatrixXd& m,
                              const Eigen::VectorXd& kernel);

enum class KernelPolicy { ReturnZero, Throw };

/// Determinant of L on the zero-sum subspace. When the kernel of L is not
/// exactly span(1) the result is 0, or DegenerateKernel is thrown under
/// KernelPolicy::Throw.
double det_red(const Eigen::MatrixXd& lap,
               KernelPolicy policy = KernelPolicy::ReturnZero,
               double tol = kInertiaTol);

/// det of a square matrix; the empty matrix has determinant 1.
double determinant(const Eigen::MatrixXd& m);

struct DetRedReport {
  double lhs = 0.0;          // det_red(L) / N
  double rhs = 0.0;          // det(Z) * prod(gamma)
  double ratio = 0.0;        // lhs / rhs
  int sign_factor = 0;       // sign of ratio
  bool magnitude_match = false;
};

/// Compares det_red(L)/N with det(Z) * prod(gamma) at relative 1e-8.
/// Throws NotConnected, SingularCycleForm, DegenerateKernel.
DetRedReport detred_identity_check(const WeightedGraph& g,
                                   double rel_tol = 1e-8);

/// Critical weight for the single negative edge on a ring: stable iff
/// weights[negative_index] > -1 / sum_{i != neg} 1 / weights[i].
double threshold_one_cycle(std::span<const double> weights,
                           std::size_t negative_index);

/// Bound on 1/gamma_e for one negative edge shared by two cycles with k1,
/// k2 private edges and k12 shared edges, all others weighing gamma:
/// stable iff 1/gamma_e < -(1/gamma) (k1 k2 / (k1 + k2) + k12 - 1).
double threshold_two_cycle(std::size_t k1, std::size_t k2, std::size_t k12,
                           double gamma);

}  // namespace cycleindex
