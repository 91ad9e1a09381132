#include "cycleindex/kuramoto.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "cycleindex/error.hpp"
#include "cycleindex/spectral.hpp"

namespace cycleindex::kuramoto {

namespace {

std::string show(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

constexpr double kPi = std::numbers::pi;

void require_sizes(const PhaseConfiguration& pc) {
  const auto n = pc.coupling.num_vertices();
  if (pc.theta.size() != n || pc.omega.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                "theta/omega length must equal the vertex count " +
                    std::to_string(n));
  }
}

void require_ring(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "ring needs n >= 3");
}

double folded(double angle) {
  const double x = std::fmod(angle, 2.0 * kPi);
  return std::min(x, 2.0 * kPi - x);
}

}  // namespace

Eigen::VectorXd fixed_point_residual(const PhaseConfiguration& pc) {
  require_sizes(pc);
  const auto n = static_cast<Eigen::Index>(pc.theta.size());
  Eigen::VectorXd r(n);
  for (Eigen::Index i = 0; i < n; ++i) r(i) = pc.omega[static_cast<std::size_t>(i)];
  for (const auto& e : pc.coupling.edges()) {
    const double s = e.weight * std::sin(pc.theta[e.head] - pc.theta[e.tail]);
    r(static_cast<Eigen::Index>(e.tail)) += s;
    r(static_cast<Eigen::Index>(e.head)) -= s;
  }
  return r;
}

WeightedGraph jacobian_graph(const PhaseConfiguration& pc) {
  require_sizes(pc);
  std::vector<Edge> edges;
  edges.reserve(pc.coupling.num_edges());
  for (const auto& e : pc.coupling.edges()) {
    if (!(e.weight > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "coupling weights must be positive");
    }
    edges.push_back(
        {e.tail, e.head, e.weight * std::cos(pc.theta[e.head] - pc.theta[e.tail])});
  }
  return WeightedGraph(pc.coupling.num_vertices(), std::move(edges));
}

FixedPointClass classify_fixed_point(const PhaseConfiguration& pc,
                                     double residual_tol, double inertia_tol) {
  const auto residual = fixed_point_residual(pc);
  const double worst = residual.size() ? residual.cwiseAbs().maxCoeff() : 0.0;
  if (worst > residual_tol) {
    throw Error(ErrorCode::NotAFixedPoint,
                "residual " + show(worst) + " exceeds tolerance");
  }
  FixedPointClass out;
  out.jacobian = jacobian_graph(pc);
  const auto index = index_via_cycles(out.jacobian, inertia_tol);
  out.unstable_dim = index.laplacian.n_plus;
  out.zero_modes = index.laplacian.n_zero;
  for (std::size_t e = 0; e < out.jacobian.num_edges(); ++e) {
    if (out.jacobian.edge(e).weight < 0.0) out.long_links.push_back(e);
  }
  return out;
}

WeightedGraph ring(std::size_t n, double coupling) {
  require_ring(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, coupling});
  edges.push_back({0, n - 1, coupling});
  return WeightedGraph(n, std::move(edges));
}

std::vector<double> twisted_state(std::size_t n, double zeta) {
  std::vector<double> theta(n);
  for (std::size_t k = 0; k < n; ++k) theta[k] = static_cast<double>(k) * zeta;
  return theta;
}

double h_n(std::size_t n, double zeta) {
  require_ring(n);
  const double c = std::cos(zeta);
  if (std::abs(c) < 1e-12) {
    throw Error(ErrorCode::PoleError, "cos(zeta) vanishes at " + show(zeta));
  }
  const double m = static_cast<double>(n - 1);
  return m * std::cos(m * zeta) / c + 1.0;
}

double wrap_frequency(std::size_t n, double zeta) {
  return std::sin(static_cast<double>(n - 1) * zeta) + std::sin(zeta);
}

std::vector<double> omega_profile(std::size_t n, double zeta) {
  require_ring(n);
  std::vector<double> omega(n, 0.0);
  omega[n - 1] = wrap_frequency(n, zeta);
  omega[0] = -omega[n - 1];
  return omega;
}

RingAnalysis longest_stable_link(std::size_t n, double bracket_tol) {
  require_ring(n);
  if (!(bracket_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "bracket tolerance must be positive");
  }
  const std::size_t samples = 10000 * (n - 1);
  const double step = kPi / (2.0 * static_cast<double>(samples));

  RingAnalysis out;
  out.n = n;
  double prev_zeta = 0.0;
  double prev_h = h_n(n, 0.0);
  for (std::size_t k = 1; k < samples; ++k) {
    const double zeta = static_cast<double>(k) * step;
    const double h = h_n(n, zeta);
    if (h == 0.0) {
      out.roots.push_back(zeta);
    } else if ((prev_h < 0.0) != (h < 0.0) && prev_h != 0.0) {
      double lo = prev_zeta;
      double hi = zeta;
      const bool lo_negative = prev_h < 0.0;
      while (hi - lo >= bracket_tol) {
        const double mid = 0.5 * (lo + hi);
        if ((h_n(n, mid) < 0.0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      out.roots.push_back(0.5 * (lo + hi));
    }
    prev_zeta = zeta;
    prev_h = h;
  }
  if (out.roots.empty()) {
    throw Error(ErrorCode::NoRoot, "h_n has no sign change on (0, pi/2)");
  }

  const double nd = static_cast<double>(n);
  out.zeta_star = out.roots.front();
  out.normalized_link = nd * out.zeta_star / (2.0 * kPi);
  out.omega_wrap = wrap_frequency(n, out.zeta_star);
  const double wrapped = std::fmod(nd * out.zeta_star, 2.0 * kPi);
  out.is_long = wrapped > kPi / 2.0 && wrapped < 3.0 * kPi / 2.0;

  const double first_gap = folded((nd - 1.0) * out.zeta_star);
  for (std::size_t i = 1; i < out.roots.size(); ++i) {
    const double gap = folded((nd - 1.0) * out.roots[i]);
    if (gap > kPi / 2.0 && gap > first_gap + 1e-12) out.first_root_is_longest = false;
  }
  return out;
}

std::vector<RingScanRow> ring_scan(std::size_t n, double zeta_min,
                                   double zeta_max, std::size_t steps) {
  require_ring(n);
  if (steps == 0 || !(zeta_max > zeta_min)) {
    throw Error(ErrorCode::InvalidArgument, "need steps >= 1 and zeta_max > zeta_min");
  }
  const double m = static_cast<double>(n - 1);
  std::vector<RingScanRow> rows;
  rows.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    RingScanRow row;
    row.zeta = zeta_min + (zeta_max - zeta_min) * static_cast<double>(i) /
                              static_cast<double>(steps);
    row.omega_wrap = wrap_frequency(n, row.zeta);
    row.cos_wrap = std::cos(m * row.zeta);
    try {
      row.h = h_n(n, row.zeta);
    } catch (const Error&) {
      row.h = std::numeric_limits<double>::quiet_NaN();
      row.pole = true;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cycleindex::kuramoto
