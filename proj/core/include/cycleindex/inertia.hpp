#pragma once

#include <cstddef>
#include <ostream>

#include <Eigen/Core>

namespace cycleindex {

/// Counts of positive, zero and negative eigenvalues.
struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;

  std::size_t dimension() const { return n_plus + n_zero + n_minus; }
  bool operator==(const Inertia&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Inertia& i) {
  return os << "(" << i.n_plus << ", " << i.n_zero << ", " << i.n_minus << ")";
}

inline constexpr double kInertiaTol = 1e-9;

/// Eigenvalues above tau, within [-tau, tau], below -tau, where
/// tau = tol * max(1, spectral radius).
Inertia count_inertia(const Eigen::VectorXd& eigenvalues,
                      double tol = kInertiaTol);

/// Inertia of a symmetric matrix from Eigen's tridiagonal QR eigensolver.
/// Throws NotSymmetric.
Inertia inertia(const Eigen::MatrixXd& m, double tol = kInertiaTol);

}  // namespace cycleindex
