#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "cycleindex/graph.hpp"
#include "cycleindex/inertia.hpp"

namespace cycleindex::kuramoto {

/// Phases and natural frequencies on a coupling graph whose weights are
/// the (strictly positive) coupling strengths.
struct PhaseConfiguration {
  std::vector<double> theta;
  std::vector<double> omega;
  WeightedGraph coupling;
};

/// r_i = omega_i + sum_j delta_ij sin(theta_j - theta_i).
Eigen::VectorXd fixed_point_residual(const PhaseConfiguration& pc);

/// Same edges as the coupling, weights delta_ij cos(theta_j - theta_i).
/// The Jacobian at theta is the Laplacian of this graph. Throws
/// DegenerateWeight for a link at exactly +-pi/2.
WeightedGraph jacobian_graph(const PhaseConfiguration& pc);

inline constexpr double kResidualTol = 1e-8;

struct FixedPointClass {
  std::size_t unstable_dim = 0;
  std::size_t zero_modes = 0;
  WeightedGraph jacobian;
  /// Edges with a negative Jacobian weight (phase gap beyond pi/2).
  std::vector<std::size_t> long_links;
};

/// Throws NotAFixedPoint when the residual sup-norm exceeds residual_tol.
FixedPointClass classify_fixed_point(const PhaseConfiguration& pc,
                                     double residual_tol = kResidualTol,
                                     double inertia_tol = kInertiaTol);

/// Ring on n vertices with unit coupling. Edge i joins i and i+1 for
/// i < n-1; the last edge joins 0 and n-1.
WeightedGraph ring(std::size_t n, double coupling = 1.0);

/// theta_k = k * zeta.
std::vector<double> twisted_state(std::size_t n, double zeta);

/// (n-1) cos((n-1) zeta) / cos(zeta) + 1. Throws PoleError when
/// |cos zeta| < 1e-12.
double h_n(std::size_t n, double zeta);

/// omega_{n-1}(zeta) = sin((n-1) zeta) + sin(zeta).
double wrap_frequency(std::size_t n, double zeta);

/// Frequencies that make the twisted state theta_k = k zeta a fixed point
/// of the unit ring: zero except omega_{n-1} and omega_0 = -omega_{n-1}.
std::vector<double> omega_profile(std::size_t n, double zeta);

struct RingAnalysis {
  std::size_t n = 0;
  double zeta_star = 0.0;
  double normalized_link = 0.0;  // n zeta* / 2 pi
  double omega_wrap = 0.0;
  bool is_long = false;          // n zeta* mod 2 pi in (pi/2, 3 pi/2)
  /// Every root of h_n in (0, pi/2), ascending.
  std::vector<double> roots;
  /// False if some later root with a long wrap link has a longer folded
  /// wrap gap (n-1) zeta than the first root.
  bool first_root_is_longest = true;
};

/// First positive root of h_n: fixed grid with step pi / (2e4 (n-1)), then
/// bisection to a bracket under `bracket_tol`. Throws NoRoot.
RingAnalysis longest_stable_link(std::size_t n, double bracket_tol = 1e-12);

struct RingScanRow {
  double zeta = 0.0;
  double h = 0.0;  // NaN on a pole row
  double omega_wrap = 0.0;
  double cos_wrap = 0.0;  // cos((n-1) zeta)
  bool pole = false;
};

/// steps + 1 evenly spaced samples from zeta_min to zeta_max inclusive.
std::vector<RingScanRow> ring_scan(std::size_t n, double zeta_min,
                                   double zeta_max, std::size_t steps);

}  // namespace cycleindex::kuramoto
