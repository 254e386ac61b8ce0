#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "triosc/errors.hpp"
#include "triosc/gaussian.hpp"
#include "triosc/pipeline.hpp"
#include "triosc/quantities.hpp"

namespace triosc {
namespace {

using testing::asymmetric;
using testing::bisymmetric;
using testing::hooke;

// Two-mode squeezed vacuum with squeezing r.
MatX tmsv(double r) {
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  MatX m = MatX::Zero(4, 4);
  m.diagonal().setConstant(c);
  m(0, 2) = m(2, 0) = s;
  m(1, 3) = m(3, 1) = -s;
  return m;
}

TEST(WignerMatrix, FrozenEntries) {
  struct Case {
    QuenchSpec spec;
    double t, g11, g22;
  };
  const Case cases[] = {
      {hooke(1.5, 1.0), 0.7, 1.6329931618554520655, 0.68041381743977169394},
      {bisymmetric(3, 5, 1.5, 4, 0.01), 25.0, 1.4860040722380007893, 1473.7854864140331191},
      {bisymmetric(3, 5, 1.5, 0, 0.1), 5.0, 0.077266592395783942541, 33.143232684084340608},
      {asymmetric(0.3), 2.0, 0.55062446858759150705, 3.509636583961405391},
  };
  for (const auto& c : cases) {
    const Mat6 g = QuenchedSystem(c.spec).state(c.t).g();
    EXPECT_NEAR(g(0, 0), c.g11, 1e-10 * std::max(1.0, c.g11));
    EXPECT_NEAR(g(1, 1), c.g22, 1e-10 * std::max(1.0, c.g22));
  }
}

TEST(WignerMatrix, UnitDeterminantAndSymmetric) {
  const QuenchedSystem sys(bisymmetric(3, 5, 1.5, 4, 0.01));
  for (double t : {0.0, 1.0, 12.5, 40.0}) {
    const Mat6 g = sys.state(t).g();
    EXPECT_NEAR(g.determinant(), 1.0, 1e-9);
    EXPECT_EQ((g - g.transpose()).norm(), 0.0);
  }
}

TEST(WignerMatrix, InvariantUnderRowSignFlips) {
  const QuenchedSystem sys(asymmetric(0.3));
  const auto blocks = s_blocks(sys.ermakov_modes(2.0));
  const Mat3 r = sys.normal_modes().rotation;
  Mat3 flipped = r;
  flipped.row(1) *= -1.0;
  flipped.row(2) *= -1.0;
  EXPECT_LT((gaussian_matrix(r, blocks) - gaussian_matrix(flipped, blocks)).norm(), 1e-14);
}

TEST(WignerMatrix, GroundStateBeforeQuench) {
  const QuenchedSystem sys(asymmetric(0.3));
  const auto blocks = s_blocks(sys.ermakov_modes(0.0));
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(blocks[i].a, sys.sigma0()[i], 1e-15);
    EXPECT_NEAR(blocks[i].b, 1.0 / sys.sigma0()[i], 1e-15);
    EXPECT_EQ(blocks[i].c, 0.0);
  }
}

TEST(WignerMatrix, IdentityRotationGivesBlockDiagonal) {
  const std::array<SBlock, 3> blocks{SBlock{2.0, 0.5, 0.3}, SBlock{1.0, 1.0, 0.0},
                                     SBlock{4.0, 0.25, -0.1}};
  EXPECT_EQ(gaussian_matrix(Mat3::Identity(), blocks), block_diagonal(blocks));
}

TEST(Covariance, IdentityMapsToIdentity) {
  EXPECT_EQ(covariance(Mat6::Identity()), Mat6::Identity());
}

TEST(Covariance, SignPattern) {
  const GaussianState st = QuenchedSystem(asymmetric(0.3)).state(2.0);
  const Mat6& g = st.g();
  const Mat6& s = st.cov();
  EXPECT_NEAR(s(0, 0), g(1, 1), 1e-15);
  EXPECT_NEAR(s(1, 1), g(0, 0), 1e-15);
  EXPECT_NEAR(s(0, 1), -g(1, 0), 1e-15);
  EXPECT_NEAR(s(4, 5), -g(5, 4), 1e-15);
  EXPECT_NEAR(s(0, 2), g(1, 3), 1e-15);
  EXPECT_NEAR(s(0, 3), -g(1, 2), 1e-15);
}

TEST(Covariance, IsInverseOfWignerMatrix) {
  for (double t : {0.3, 2.0, 7.0}) {
    const GaussianState st = QuenchedSystem(asymmetric(0.3)).state(t);
    EXPECT_LT((st.cov() * st.g() - Mat6::Identity()).norm(), 1e-10);
  }
}

TEST(Covariance, TwoConstructionsAgree) {
  const QuenchedSystem sys(bisymmetric(3, 5, 1.5, 4, 0.01));
  const Mat3 r = sys.normal_modes().rotation;
  for (double t : {0.0, 5.0, 25.0}) {
    const auto blocks = s_blocks(sys.ermakov_modes(t));
    const Mat6 a = covariance(gaussian_matrix(r, blocks));
    const Mat6 b = covariance_from_blocks(r, blocks);
    EXPECT_LT((a - b).norm(), 1e-10 * a.norm());
  }
}

TEST(Covariance, RejectsMixedInput) {
  EXPECT_THROW(covariance(2.0 * Mat6::Identity()), NotPure);
  EXPECT_THROW(GaussianState(Mat6(0.5 * Mat6::Identity())), NotPure);
}

TEST(Reduce, SelectsBlocksInOrder) {
  const GaussianState st = QuenchedSystem(asymmetric(0.3)).state(2.0);
  const ReducedState rs = reduce(st, {Mode::C, Mode::A});
  ASSERT_EQ(rs.cov.rows(), 4);
  EXPECT_EQ(rs.cov.block(0, 0, 2, 2), st.cov().block(4, 4, 2, 2));
  EXPECT_EQ(rs.cov.block(0, 2, 2, 2), st.cov().block(4, 0, 2, 2));
  EXPECT_EQ(st.mode_cov(Mode::B), st.cov().block(2, 2, 2, 2));
}

TEST(Reduce, DecoupledUnquenchedMode) {
  const GaussianState st = QuenchedSystem(QuenchSpec({1, 2, 3}, {0, 0, 0}, 1.0)).state(4.0);
  const ReducedState a = reduce(st, {Mode::A});
  // Uncoupled mode of frequency w sits in its ground state diag(1/w, w).
  EXPECT_LT((a.cov - MatX::Identity(2, 2)).norm(), 1e-14);
  const ReducedState c = reduce(st, {Mode::C});
  EXPECT_NEAR(c.cov(0, 0), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(c.cov(1, 1), 3.0, 1e-14);
  EXPECT_NEAR(c.cov(0, 1), 0.0, 1e-14);
}

TEST(Reduce, RejectsBadSelections) {
  const GaussianState st = QuenchedSystem(asymmetric(0.3)).state(2.0);
  EXPECT_THROW(reduce(st, {}), InvalidArgument);
  EXPECT_THROW(reduce(st, {Mode::A, Mode::B, Mode::C}), InvalidArgument);
  EXPECT_THROW(reduce(st, {Mode::A, Mode::A}), InvalidArgument);
}

TEST(SymplecticSpectrum, PureStateIsAllOnes) {
  const QuenchedSystem sys(bisymmetric(3, 5, 1.5, 4, 0.01));
  for (double t : {1.0, 25.0, 50.0}) {
    for (double nu : symplectic_eigenvalues(sys.state(t).cov())) EXPECT_NEAR(nu, 1.0, 1e-7);
  }
}

TEST(SymplecticSpectrum, KnownStates) {
  MatX thermal = 3.0 * MatX::Identity(2, 2);
  EXPECT_NEAR(symplectic_eigenvalues(thermal)[0], 3.0, 1e-14);

  const auto two = symplectic_eigenvalues(tmsv(0.7));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(two[0], 1.0, 1e-12);
  EXPECT_NEAR(two[1], 1.0, 1e-12);

  MatX mixed = MatX::Zero(4, 4);
  mixed.diagonal() << 2.0, 2.0, 5.0, 5.0;
  const auto nu = symplectic_eigenvalues(mixed);
  EXPECT_NEAR(nu[0], 5.0, 1e-12);
  EXPECT_NEAR(nu[1], 2.0, 1e-12);
}

TEST(SymplecticSpectrum, ReducedPairMatchesComplementaryMode) {
  // For a pure state the two-mode marginal shares its nontrivial
  // symplectic eigenvalue with the remaining single mode.
  const GaussianState st = QuenchedSystem(asymmetric(0.3)).state(2.0);
  const auto pair = symplectic_eigenvalues(reduce(st, {Mode::A, Mode::B}).cov);
  const double a_c = std::sqrt(st.mode_cov(Mode::C).determinant());
  EXPECT_NEAR(pair[0], a_c, 1e-9);
  EXPECT_NEAR(pair[1], 1.0, 1e-9);
}

TEST(SymplecticSpectrum, SingleModeIsInversePurity) {
  const GaussianState st = QuenchedSystem(asymmetric(0.3)).state(2.0);
  for (Mode m : {Mode::A, Mode::B, Mode::C}) {
    const double nu = symplectic_eigenvalues(reduce(st, {m}).cov)[0];
    EXPECT_NEAR(nu, 1.0 / purity_det(st.mode_cov(m)), 1e-10);
  }
}

TEST(SymplecticSpectrum, RejectsIndefinite) {
  MatX m = MatX::Identity(2, 2);
  m(1, 1) = -1.0;
  EXPECT_THROW(symplectic_eigenvalues(m), NotPositiveDefinite);
}

TEST(Physicality, VacuumAndSubVacuum) {
  const PhysicalityReport vac = physicality(MatX::Identity(6, 6));
  EXPECT_TRUE(vac.ok);
  EXPECT_NEAR(vac.min_eigenvalue, 0.0, 1e-14);
  const PhysicalityReport bad = physicality(MatX(0.5 * MatX::Identity(6, 6)));
  EXPECT_FALSE(bad.ok);
  EXPECT_NEAR(bad.min_eigenvalue, -0.5, 1e-14);
}

TEST(Physicality, QuenchedStatesAreLegal) {
  const QuenchedSystem sys(bisymmetric(3, 5, 1.5, 4, 0.01));
  for (double t : {0.0, 10.0, 33.0}) EXPECT_TRUE(physicality(sys.state(t).cov()).ok);
}

TEST(LadderBasis, VacuumAndHermiticity) {
  const CMatX v = to_ladder_basis(MatX::Identity(6, 6));
  EXPECT_LT((v - 2.0 * CMatX::Identity(6, 6)).norm(), 1e-15);

  const GaussianState st = QuenchedSystem(asymmetric(0.3)).state(2.0);
  const CMatX l = to_ladder_basis(st.cov());
  EXPECT_LT((l - l.adjoint()).norm(), 1e-12 * l.norm());
  for (int j = 0; j < 3; ++j) {
    // Mean of the two diagonal entries recovers the mode trace.
    const double mean = 0.5 * (l(2 * j, 2 * j).real() + l(2 * j + 1, 2 * j + 1).real());
    EXPECT_NEAR(mean, st.cov().block(2 * j, 2 * j, 2, 2).trace(), 1e-12);
  }
}

TEST(Ppt, DecoupledChainIsSeparable) {
  const GaussianState st = QuenchedSystem(QuenchSpec({1, 2, 3}, {0, 0, 0}, 0.2)).state(4.0);
  for (Mode m : {Mode::A, Mode::B, Mode::C}) {
    const PptResult r = ppt_test(st, m);
    EXPECT_TRUE(r.separable);
    EXPECT_NEAR(r.nu_tilde_min, 1.0, 1e-9);
  }
}

TEST(Ppt, TwoModeSqueezedVacuumReference) {
  // Partially transposed TMSV has nu~ = exp(-2r); mode C is a vacuum pad.
  const double r = 0.4;
  Mat6 cov = Mat6::Identity();
  cov.block(0, 0, 4, 4) = tmsv(r);
  const GaussianState st(Mat6(cov.inverse()));
  const PptResult a = ppt_test(st, Mode::A);
  EXPECT_NEAR(a.nu_tilde_min, std::exp(-2.0 * r), 1e-12);
  EXPECT_FALSE(a.separable);
  EXPECT_GE(ppt_test(st, Mode::C).nu_tilde_min, 1.0 - 1e-12);
}

TEST(Ppt, BisymmetricSplitsMatch) {
  const GaussianState st = QuenchedSystem(bisymmetric(3, 5, 1.5, 4, 0.01)).state(25.0);
  EXPECT_NEAR(ppt_test(st, Mode::A).nu_tilde_min, ppt_test(st, Mode::C).nu_tilde_min, 1e-9);
}

TEST(Ppt, SymmetricQuenchEntangles) {
  const GaussianState st = QuenchedSystem(hooke(1.0, 0.1)).state(3.0);
  for (Mode m : {Mode::A, Mode::B, Mode::C}) {
    const PptResult r = ppt_test(st, m);
    EXPECT_LT(r.nu_tilde_min, 1.0);
    EXPECT_FALSE(r.separable);
  }
}

}  // namespace
}  // namespace triosc
