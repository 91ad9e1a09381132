#include <random>

#include <gtest/gtest.h>

#include "cycleindex/covering.hpp"
#include "cycleindex/oracle.hpp"
#include "cycleindex/spectral.hpp"
#include "support.hpp"

namespace cycleindex {
namespace {

using testing::numeric_rank;

TEST(Cover, TreeIsItsOwnCover) {
  const auto g = testing::path({1, -2, 3});
  const auto cover = build_cover(g);
  EXPECT_EQ(cover.tree.num_vertices(), 4u);
  EXPECT_TRUE(cover.duplicates.empty());
  const auto pp = build_projections(cover);
  EXPECT_EQ(pp.x, IntMatrix::Identity(4, 4));
  EXPECT_EQ(pp.q.cols(), 0);
  EXPECT_TRUE(laplacian_restriction_check(g, cover, pp));
}

TEST(Cover, DiamondHasSixVertices) {
  const auto g = testing::diamond(0.7, 1.3, -0.4, 2.0, 0.9);
  const auto cover = build_cover(g);
  EXPECT_EQ(cover.tree.num_vertices(), 6u);
  EXPECT_EQ(cover.tree.num_edges(), 5u);
  EXPECT_TRUE(is_connected(cover.tree));
  const auto pp = build_projections(cover);
  EXPECT_EQ(pp.x.rows(), 6);
  EXPECT_EQ(pp.x.cols(), 4);
  EXPECT_EQ(pp.q.cols(), 2);
  EXPECT_TRUE(laplacian_restriction_check(g, cover, pp));
}

TEST(Cover, TriangleUnrollsToPath) {
  const auto g = testing::triangle(1.0, 2.0, -0.5);
  const auto cover = build_cover(g);
  ASSERT_EQ(cover.tree.num_vertices(), 4u);
  std::size_t leaves = 0;
  for (std::size_t v = 0; v < 4; ++v) {
    const auto deg = cover.tree.neighbors(v).size();
    EXPECT_LE(deg, 2u);
    if (deg == 1) ++leaves;
  }
  EXPECT_EQ(leaves, 2u);
  for (std::size_t e = 0; e < 3; ++e) {
    EXPECT_EQ(cover.tree.edge(e).weight, g.edge(cover.edge_correspondence[e]).weight);
  }
}

TEST(Cover, RestrictionFailsOnTamperedMap) {
  const auto g = testing::diamond(1, 2, 3, 4, 5);
  auto cover = build_cover(g);
  auto pp = build_projections(cover);
  const auto dup = static_cast<Eigen::Index>(cover.duplicates.front());
  pp.x.row(dup).setZero();
  EXPECT_FALSE(laplacian_restriction_check(g, cover, pp));
}

class CoverProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(CoverProperties, ProjectionIdentities) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_connected_graph({}, rng);
    const auto cover = build_cover(g);
    const auto pp = build_projections(cover);
    const auto c = static_cast<Eigen::Index>(cycle_rank(g));
    const auto nt = static_cast<Eigen::Index>(cover.tree.num_vertices());

    ASSERT_EQ(nt, static_cast<Eigen::Index>(g.num_vertices()) + c);
    ASSERT_EQ(cover.tree.num_edges(), g.num_edges());
    ASSERT_EQ(spanning_tree(cover.tree).non_tree_edges.size(), 0u);
    ASSERT_TRUE(laplacian_restriction_check(g, cover, pp));

    ASSERT_TRUE(((pp.q.transpose() * pp.x).array() == 0).all());
    ASSERT_EQ(integer_rank(pp.q), static_cast<std::size_t>(c));
    ASSERT_EQ(integer_rank(pp.x), g.num_vertices());

    // Q spans the kernel of X^T, which has dimension N_T - N_G.
    const Eigen::MatrixXd xt = pp.x.cast<double>().transpose();
    ASSERT_EQ(static_cast<Eigen::Index>(numeric_rank(xt)) + c, nt);
  }
}

TEST_P(CoverProperties, CycleBasisAgrees) {
  std::mt19937_64 rng(GetParam() + 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_connected_graph({}, rng);
    const auto cover = build_cover(g);
    const auto pp = build_projections(cover);
    const auto via_cover = cycle_basis_via_cover(g, cover, pp);
    const auto direct = cycle_basis(g);
    ASSERT_EQ(via_cover.cycles.cols(), direct.cycles.cols());
    if (direct.cycles.cols() == 0) continue;

    ASSERT_TRUE(((incidence(g) * via_cover.cycles).array() == 0).all());
    ASSERT_EQ(integer_rank(via_cover.cycles), direct.rank());
    IntMatrix both(direct.cycles.rows(), 2 * direct.cycles.cols());
    both << via_cover.cycles, direct.cycles;
    ASSERT_EQ(integer_rank(both), direct.rank());

    const auto a = inertia(cycle_form(via_cover).z);
    const auto b = inertia(cycle_form(direct).z);
    ASSERT_EQ(a, b);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CoverProperties, ::testing::Values(5u, 6u));

}  // namespace
}  // namespace cycleindex
