// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cycleindex/cycleindex.hpp"
#include "identity_checks.hpp"
#include "support.hpp"

namespace ci = cycleindex;
namespace ku = cycleindex::kuramoto;
using ci::testing::relative_gap;

namespace {

constexpr std::size_t kInstances = 1000;
constexpr std::uint64_t kSeed = 20240611;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<ci::WeightedGraph> corpus() {
  std::mt19937_64 rng(kSeed);
  std::vector<ci::WeightedGraph> out;
  out.reserve(kInstances);
  for (std::size_t i = 0; i < kInstances; ++i) out.push_back(ci::oracle::random_connected_graph({}, rng));
  return out;
}

void index_exactness(const std::vector<ci::WeightedGraph>& graphs) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t agree = 0;
  for (const auto& g : graphs) {
    if (ci::index_via_cycles(g).laplacian.n_plus == ci::oracle::brute_force_index(g).n_plus) ++agree;
  }
  const double elapsed = seconds_since(t0);
  report(1, agree == graphs.size() && elapsed < 60.0,
         std::to_string(agree) + "/" + std::to_string(graphs.size()) +
             " agree with the eigensolver, " + std::to_string(elapsed) + " s");
}

void index_bounds(const std::vector<ci::WeightedGraph>& graphs) {
  std::size_t ok = 0;
  for (const auto& g : graphs) {
    const auto b = ci::index_bounds(g);
    const auto n_plus = ci::oracle::brute_force_index(g).n_plus;
    if (b.lower <= n_plus && n_plus <= b.upper) ++ok;
  }
  std::mt19937_64 rng(kSeed + 2);
  std::size_t trees_ok = 0;
  const std::size_t trees = 500;
  for (std::size_t i = 0; i < trees; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
    const auto g = ci::testing::random_signed_tree(n, rng);
    const auto b = ci::index_bounds(g);
    const auto k = g.negative_edge_count();
    if (b.lower == k && b.upper == k && ci::oracle::brute_force_index(g).n_plus == k) ++trees_ok;
  }
  report(2, ok == graphs.size() && trees_ok == trees,
         "bounds hold on " + std::to_string(ok) + "/" + std::to_string(graphs.size()) +
             ", trees tight on " + std::to_string(trees_ok) + "/" + std::to_string(trees));
}

void determinant_identity(const std::vector<ci::WeightedGraph>& graphs) {
  std::size_t checked = 0, matched = 0;
  for (const auto& g : graphs) {
    const auto z = ci::cycle_form(ci::cycle_basis(g)).z;
    if (ci::inertia(z).n_zero != 0) continue;
    ++checked;
    try {
      if (ci::detred_identity_check(g).magnitude_match) ++matched;
    } catch (const ci::Error&) {
    }
  }

  std::mt19937_64 rng(kSeed + 3);
  std::uniform_real_distribution<double> mag(0.1, 2.0);
  std::bernoulli_distribution flip(0.5);
  double w[5];
  for (auto& x : w) x = flip(rng) ? -mag(rng) : mag(rng);
  const auto [a, b, c, d, e] = w;
  const double trees = a * b * c + a * b * d + a * c * d + a * c * e +
                       a * d * e + b * c * d + b * c * e + b * d * e;
  const double laurent = 1 / (d * e) + 1 / (c * e) + 1 / (b * e) + 1 / (b * d) +
                         1 / (b * c) + 1 / (a * e) + 1 / (a * d) + 1 / (a * c);
  const auto diamond = ci::testing::diamond(a, b, c, d, e);
  const Eigen::MatrixXd lap = ci::laplacian(diamond);
  const double cofactor = ci::determinant(lap.topLeftCorner(3, 3));
  const double det_z = ci::determinant(ci::cycle_form(ci::cycle_basis(diamond)).z);
  const bool diamond_ok = relative_gap(std::abs(cofactor), std::abs(trees)) <= 1e-8 &&
                          relative_gap(std::abs(det_z), std::abs(laurent)) <= 1e-8;

  report(3, checked > 0 && matched == checked && diamond_ok,
         std::to_string(matched) + "/" + std::to_string(checked) +
             " nonsingular instances match in magnitude, diamond expansions " +
             (diamond_ok ? "match" : "differ"));
}

void ring_table() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::size_t, double>> table{
      {3, 0.447}, {4, 0.392}, {5, 0.358}, {10, 0.297},
      {20, 0.272}, {30, 0.264}, {40, 0.261}, {50, 0.258}};
  bool ok = true;
  double previous = INFINITY;
  std::string worst;
  for (const auto& [n, expected] : table) {
    const auto r = ku::longest_stable_link(n);
    const bool row_ok = std::abs(r.normalized_link - expected) <= 1e-3 && r.is_long &&
                        r.normalized_link > 0.25 && r.normalized_link < previous;
    if (!row_ok) {
      ok = false;
      worst += " n=" + std::to_string(n) + ":" + std::to_string(r.normalized_link);
    }
    previous = r.normalized_link;
  }
  const double elapsed = seconds_since(t0);
  report(4, ok && elapsed < 5.0,
         "8 rows " + std::string(ok ? "within 0.001, long, decreasing" : "off:" + worst) +
             ", " + std::to_string(elapsed) + " s");
}

void ring_dichotomy() {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_real_distribution<double> zeta_dist(0.0, std::numbers::pi / 2);
  std::size_t agree = 0, used = 0, skipped = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    for (int s = 0; s < 200; ++s) {
      const double zeta = zeta_dist(rng);
      if (std::abs(std::cos(zeta)) <= 1e-6 ||
          std::abs(std::cos(static_cast<double>(n - 1) * zeta)) <= 1e-6) {
        ++skipped;
        continue;
      }
      ++used;
      const ku::PhaseConfiguration pc{ku::twisted_state(n, zeta), ku::omega_profile(n, zeta),
                                      ku::ring(n)};
      const auto c = ku::classify_fixed_point(pc);
      const bool stable = ku::h_n(n, zeta) > 0.0;
      if ((c.unstable_dim == 0) == stable) ++agree;
    }
  }
  report(5, agree == used,
         std::to_string(agree) + "/" + std::to_string(used) + " samples agree (" +
             std::to_string(skipped) + " skipped)");
}

void thresholds() {
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_real_distribution<double> mag(0.1, 2.0);
  std::size_t one_ok = 0, two_ok = 0;
  const std::size_t instances = 50;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 10)(rng);
    const auto neg = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::vector<double> w(n);
    for (auto& x : w) x = mag(rng);
    const double crit = ci::threshold_one_cycle(w, neg);
    w[neg] = crit * 0.99;
    const auto below = ci::oracle::brute_force_index(ci::testing::ring(w)).n_plus;
    w[neg] = crit * 1.01;
    const auto above = ci::oracle::brute_force_index(ci::testing::ring(w)).n_plus;
    if (below == 0 && above == 1) ++one_ok;
  }
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (std::size_t i = 0; i < instances; ++i) {
    std::size_t k1 = len(rng), k2 = len(rng), k12 = len(rng);
    while ((k1 == 1) + (k2 == 1) + (k12 == 1) > 1) {
      k1 = len(rng);
      k2 = len(rng);
      k12 = len(rng);
    }
    const double gamma = mag(rng);
    const double crit = 1.0 / ci::threshold_two_cycle(k1, k2, k12, gamma);
    const auto below =
        ci::oracle::brute_force_index(ci::testing::theta_graph(k1, k2, k12, gamma, crit * 0.99)).n_plus;
    const auto above =
        ci::oracle::brute_force_index(ci::testing::theta_graph(k1, k2, k12, gamma, crit * 1.01)).n_plus;
    if (below == 0 && above == 1) ++two_ok;
  }
  report(6, one_ok == instances && two_ok == instances,
         "one-cycle " + std::to_string(one_ok) + "/50, two-cycle " + std::to_string(two_ok) +
             "/50 flip across the critical weight");
}

void matrix_identities() {
  const auto h = ci::testing::check_haynsworth(500, kSeed + 7);
  const auto dh = ci::testing::check_determinantal_haynsworth(500, kSeed + 8);
  const auto s = ci::testing::check_sylvester(500, kSeed + 9);
  const auto r = ci::testing::check_rank_one_update(500, kSeed + 10);
  const auto line = [](const char* name, const ci::testing::IdentityTally& t) {
    return std::string(name) + " " + std::to_string(t.checked - t.failed) + "/" +
           std::to_string(t.checked);
  };
  report(7, h.failed + dh.failed + s.failed + r.failed == 0,
         line("haynsworth", h) + ", " + line("det-haynsworth", dh) + ", " +
             line("sylvester", s) + ", " + line("rank-one", r));
}

void covering(const std::vector<ci::WeightedGraph>& graphs) {
  std::size_t ok = 0;
  for (const auto& g : graphs) {
    const auto cover = ci::build_cover(g);
    const auto pp = ci::build_projections(cover);
    if (!ci::laplacian_restriction_check(g, cover, pp, 1e-12)) continue;
    const auto a = ci::inertia(ci::cycle_form(ci::cycle_basis_via_cover(g, cover, pp)).z);
    const auto b = ci::inertia(ci::cycle_form(ci::cycle_basis(g)).z);
    if (a.n_plus == b.n_plus) ++ok;
  }
  report(8, ok == graphs.size(),
         std::to_string(ok) + "/" + std::to_string(graphs.size()) +
             " covers restrict exactly with matching n+(Z)");
}

}  // namespace

int main() {
  const auto graphs = corpus();
  const std::pair<int, void (*)()> standalone[] = {
      {4, ring_table}, {5, ring_dichotomy}, {6, thresholds}, {7, matrix_identities}};

  auto guard = [](int id, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(id, false, std::string("exception: ") + e.what());
    }
  };
  guard(1, [&] { index_exactness(graphs); });
  guard(2, [&] { index_bounds(graphs); });
  guard(3, [&] { determinant_identity(graphs); });
  for (const auto& [id, fn] : standalone) guard(id, fn);
  guard(8, [&] { covering(graphs); });
  return failures == 0 ? 0 : 1;
}
