#include <gtest/gtest.h>

#include "cycleindex/spectral.hpp"
#include "identity_checks.hpp"

namespace cycleindex::testing {
namespace {

TEST(MatrixIdentities, Haynsworth) {
  const auto t = check_haynsworth(500, 1);
  EXPECT_EQ(t.failed, 0u);
  EXPECT_EQ(t.checked, 500u);
}

TEST(MatrixIdentities, DeterminantalHaynsworth) {
  EXPECT_EQ(check_determinantal_haynsworth(500, 2).failed, 0u);
}

TEST(MatrixIdentities, Sylvester) {
  EXPECT_EQ(check_sylvester(500, 3).failed, 0u);
}

TEST(MatrixIdentities, RankOneUpdate) {
  EXPECT_EQ(check_rank_one_update(500, 4).failed, 0u);
}

TEST(MatrixIdentities, HaynsworthByHand) {
  // [[2, 1], [1, -3]]: A = 2, M/A = -3.5.
  Eigen::Matrix2d m;
  m << 2, 1,
       1, -3;
  EXPECT_EQ(inertia(m), (Inertia{1, 0, 1}));
  EXPECT_NEAR(determinant(m), 2.0 * -3.5, 1e-15);
}

TEST(MatrixIdentities, DeterminantOfEmptyIsOne) {
  EXPECT_EQ(determinant(Eigen::MatrixXd(0, 0)), 1.0);
}

TEST(MatrixIdentities, RestrictedDeterminantOnKernelComplement) {
  // diag(2, 3, 0) restricted to the span of e1, e2.
  const Eigen::MatrixXd m = Eigen::Vector3d(2, 3, 0).asDiagonal();
  EXPECT_NEAR(restricted_determinant(m, Eigen::Vector3d(0, 0, 1)), 6.0, 1e-14);
}

}  // namespace
}  // namespace cycleindex::testing
