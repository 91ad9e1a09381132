#include "cycleindex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include "cycleindex/error.hpp"

namespace cycleindex {

Inertia count_inertia(const Eigen::VectorXd& eigenvalues, double tol) {
  const double radius =
      eigenvalues.size() > 0 ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  const double tau = tol * std::max(1.0, radius);
  Inertia out;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues(i);
    if (lambda > tau) {
      ++out.n_plus;
    } else if (lambda < -tau) {
      ++out.n_minus;
    } else {
      ++out.n_zero;
    }
  }
  return out;
}

Inertia inertia(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  if (m.size() == 0) return {};
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw Error(ErrorCode::NotSymmetric, "asymmetry exceeds 1e-10");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NotSymmetric, "eigensolver did not converge");
  }
  return count_inertia(es.eigenvalues(), tol);
}

Eigen::MatrixXd laplacian(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.tail);
    const auto v = static_cast<Eigen::Index>(e.head);
    lap(u, v) = e.weight;
    lap(v, u) = e.weight;
  }
  for (Eigen::Index v = 0; v < n; ++v) lap(v, v) = -lap.row(v).sum();
  return lap;
}

CycleForm cycle_form(const CycleBasis& basis) {
  const Eigen::MatrixXd y = basis.cycles.cast<double>();
  const Eigen::VectorXd inv = basis.weights.cwiseInverse();
  CycleForm form{-(y.transpose() * inv.asDiagonal() * y), basis};
  // Exactly symmetric, whatever the summation order did.
  form.z = 0.5 * (form.z + form.z.transpose()).eval();
  return form;
}

CycleIndex index_via_cycles(const WeightedGraph& g, const CycleBasis& basis,
                            double tol) {
  CycleIndex out;
  out.negative_edges = g.negative_edge_count();
  out.cycle_rank = basis.rank();
  out.cycle_form = inertia(cycle_form(basis).z, tol);
  out.laplacian.n_plus =
      out.negative_edges - out.cycle_form.n_plus - out.cycle_form.n_zero;
  out.laplacian.n_zero = 1 + out.cycle_form.n_zero;
  out.laplacian.n_minus =
      g.num_vertices() - out.laplacian.n_plus - out.laplacian.n_zero;
  out.degenerate = out.laplacian.n_zero > 1;
  return out;
}

CycleIndex index_via_cycles(const WeightedGraph& g, double tol) {
  return index_via_cycles(g, cycle_basis(g, spanning_tree(g)), tol);
}

IndexBounds index_bounds(const WeightedGraph& g) {
  const auto plus = connected_components(g, SignFilter::PositiveOnly).count;
  const auto minus = connected_components(g, SignFilter::NegativeOnly).count;
  return {plus - 1, g.num_vertices() - minus};
}

namespace {

IntMatrix lift_cycles(const WeightedGraph& g, SignFilter filter) {
  const auto sub = filtered_subgraph(g, filter);
  const auto local = cycle_basis(sub.graph, spanning_forest(sub.graph));
  IntMatrix lifted = IntMatrix::Zero(static_cast<Eigen::Index>(g.num_edges()),
                                     local.cycles.cols());
  for (std::size_t e = 0; e < sub.parent_edge.size(); ++e) {
    lifted.row(static_cast<Eigen::Index>(sub.parent_edge[e])) =
        local.cycles.row(static_cast<Eigen::Index>(e));
  }
  return lifted;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace

MixedCycleReduction mixed_cycle_reduction(const WeightedGraph& g, double tol) {
  const auto full = cycle_basis(g, spanning_tree(g));
  const auto rows = static_cast<Eigen::Index>(g.num_edges());

  MixedCycleReduction out;
  auto& part = out.partition;
  part.plus_cycles = lift_cycles(g, SignFilter::PositiveOnly);
  part.minus_cycles = lift_cycles(g, SignFilter::NegativeOnly);
  part.mixed_cycles = IntMatrix::Zero(rows, 0);

  IntMatrix span = hcat(part.plus_cycles, part.minus_cycles);
  std::size_t rank = static_cast<std::size_t>(span.cols());
  for (Eigen::Index j = 0; j < full.cycles.cols() && rank < full.rank(); ++j) {
    IntMatrix candidate = hcat(span, full.cycles.col(j));
    if (integer_rank(candidate) > rank) {
      span = std::move(candidate);
      part.mixed_cycles = hcat(part.mixed_cycles, full.cycles.col(j));
      ++rank;
    }
  }

  CycleBasis ordered{hcat(part.mixed_cycles, hcat(part.plus_cycles,
                                                  part.minus_cycles)),
                     full.weights};
  part.z = cycle_form(ordered).z;
  const auto m = part.mixed_cycles.cols();
  const auto p = part.plus_cycles.cols();
  const auto q = part.minus_cycles.cols();
  part.a_mixed = part.z.block(0, 0, m, m);
  part.b_plus = part.z.block(0, m, m, p);
  part.b_minus = part.z.block(0, m + p, m, q);
  part.z_plus = part.z.block(m, m, p, p);
  part.z_minus = part.z.block(m + p, m + p, q, q);

  out.schur_complement = part.a_mixed;
  if (m > 0 && p > 0) {
    out.schur_complement -=
        part.b_plus * part.z_plus.fullPivLu().solve(part.b_plus.transpose());
  }
  if (m > 0 && q > 0) {
    out.schur_complement -=
        part.b_minus * part.z_minus.fullPivLu().solve(part.b_minus.transpose());
  }
  out.schur_complement =
      0.5 * (out.schur_complement + out.schur_complement.transpose()).eval();

  out.n_plus_reduced =
      static_cast<std::size_t>(q) + inertia(out.schur_complement, tol).n_plus;
  out.n_plus_direct = inertia(part.z, tol).n_plus;
  return out;
}

double determinant(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 1.0;
  return m.fullPivLu().determinant();
}

double restricted_determinant(const Eigen::MatrixXd& m,
                              const Eigen::VectorXd& kernel) {
  const auto n = m.rows();
  if (n != m.cols() || kernel.size() != n || n == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "restricted_determinant: dimension mismatch");
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(kernel.normalized());
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd complement = q.rightCols(n - 1);
  return determinant(complement.transpose() * m * complement);
}

double det_red(const Eigen::MatrixXd& lap, KernelPolicy policy, double tol) {
  const auto n = lap.rows();
  if (n == 0 || lap.cols() != n) {
    throw Error(ErrorCode::InvalidArgument, "det_red needs a nonempty square matrix");
  }
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  const double scale = std::max(1.0, lap.cwiseAbs().maxCoeff());
  const bool annihilates_ones = (lap * ones).cwiseAbs().maxCoeff() <= 1e-10 * scale;
  if (!annihilates_ones || inertia(lap, tol).n_zero != 1) {
    if (policy == KernelPolicy::Throw) {
      throw Error(ErrorCode::DegenerateKernel,
                  "Laplacian kernel is not exactly span(1)");
    }
    return 0.0;
  }
  return restricted_determinant(lap, ones);
}

DetRedReport detred_identity_check(const WeightedGraph& g, double rel_tol) {
  const auto form = cycle_form(cycle_basis(g, spanning_tree(g)));
  if (inertia(form.z).n_zero != 0) {
    throw Error(ErrorCode::SingularCycleForm, "cycle form is singular");
  }
  DetRedReport out;
  out.lhs = det_red(laplacian(g), KernelPolicy::Throw) /
            static_cast<double>(g.num_vertices());
  double weight_product = 1.0;
  for (const auto& e : g.edges()) weight_product *= e.weight;
  out.rhs = determinant(form.z) * weight_product;
  out.ratio = out.lhs / out.rhs;
  out.sign_factor = out.ratio < 0.0 ? -1 : 1;
  const double a = std::abs(out.lhs);
  const double b = std::abs(out.rhs);
  out.magnitude_match = std::abs(a - b) <= rel_tol * std::max(a, b);
  return out;
}

double threshold_one_cycle(std::span<const double> weights,
                           std::size_t negative_index) {
  if (negative_index >= weights.size() || weights.size() < 3) {
    throw Error(ErrorCode::InvalidArgument,
                "ring needs >= 3 weights and a valid negative slot");
  }
  double reciprocal_sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i == negative_index) continue;
    if (!(weights[i] > 0.0)) {
      throw Error(ErrorCode::InvalidArgument,
                  "weight " + std::to_string(i) +
                      " must be positive; only one negative slot is allowed");
    }
    reciprocal_sum += 1.0 / weights[i];
  }
  return -1.0 / reciprocal_sum;
}

double threshold_two_cycle(std::size_t k1, std::size_t k2, std::size_t k12,
                           double gamma) {
  if (k1 == 0 || k2 == 0 || k12 == 0 || !(gamma > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "need k1, k2, k12 >= 1 and gamma > 0");
  }
  const double a = static_cast<double>(k1);
  const double b = static_cast<double>(k2);
  const double shared = static_cast<double>(k12);
  return -(a * b / (a + b) + (shared - 1.0)) / gamma;
}

}  // namespace cycleindex
