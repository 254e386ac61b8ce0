#include <gtest/gtest.h>

#include "test_support.hpp"
#include "triosc/errors.hpp"
#include "triosc/model.hpp"

namespace triosc {
namespace {

TEST(QuenchSpec, RejectsNonpositiveEpsilon) {
  EXPECT_THROW(QuenchSpec({1, 1, 1}, {0, 0, 0}, 0.0), InvalidArgument);
  EXPECT_THROW(QuenchSpec({1, 1, 1}, {0, 0, 0}, -0.5), InvalidArgument);
  EXPECT_NO_THROW(QuenchSpec({1, 1, 1}, {0, 0, 0}, 2.5));
}

TEST(QuenchSpec, RejectsNonFiniteParameters) {
  EXPECT_THROW(QuenchSpec({1, NAN, 1}, {0, 0, 0}, 1.0), InvalidArgument);
  EXPECT_THROW(QuenchSpec({1, 1, 1}, {0, INFINITY, 0}, 1.0), InvalidArgument);
}

TEST(QuenchedFrequency, PiecewiseAtZero) {
  const QuenchSpec s({3, 4, 5}, {0, 0, 0}, 0.01);
  EXPECT_EQ(quenched_frequency(s, 1, 0.0), 3.0);
  EXPECT_DOUBLE_EQ(quenched_frequency(s, 1, 0.001), 0.03);
  EXPECT_EQ(quenched_frequency(QuenchSpec({3, 4, 5}, {0, 0, 0}, 1.0), 1, 7.5), 3.0);
  EXPECT_THROW(quenched_frequency(s, 0, 1.0), InvalidArgument);
  EXPECT_THROW(quenched_frequency(s, 4, 1.0), InvalidArgument);
  EXPECT_THROW(quenched_frequency(s, 1, -1.0), InvalidArgument);
}

TEST(QuenchedCoupling, ScalesWithEpsilonSquared) {
  EXPECT_DOUBLE_EQ(quenched_coupling(QuenchSpec({1, 1, 1}, {1.5, 0, 0}, 0.1), 1, 2, 0.5), 0.015);
  EXPECT_EQ(quenched_coupling(QuenchSpec({1, 1, 1}, {0, 4, 0}, 1.0), 1, 3, 2.0), 4.0);
  EXPECT_EQ(quenched_coupling(QuenchSpec({1, 1, 1}, {0, 0, 2}, 0.01), 2, 3, 0.0), 2.0);
  const QuenchSpec s({1, 1, 1}, {1, 2, 3}, 0.5);
  EXPECT_THROW(quenched_coupling(s, 2, 1, 1.0), InvalidArgument);
  EXPECT_THROW(quenched_coupling(s, 1, 1, 1.0), InvalidArgument);
  EXPECT_THROW(quenched_coupling(s, 3, 4, 1.0), InvalidArgument);
}

TEST(CouplingMatrix, SymmetricAssembly) {
  const double w = std::sqrt(3.0);
  const QuenchSpec s({w, w, w}, {1.5, 1.5, 1.5}, 0.3);
  const Mat3 m = coupling_matrix(s, 0.0).matrix();
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(m(i, i), 3.0, 1e-15);
    for (int j = 0; j < 3; ++j) {
      if (i != j) EXPECT_EQ(m(i, j), -1.5);
    }
  }
}

TEST(CouplingMatrix, BisymmetricFig3Parameters) {
  const Mat3 m = coupling_matrix(testing::bisymmetric(3, 5, 1.5, 4, 0.01), 0.0).matrix();
  EXPECT_EQ(m(0, 0), 9.0);
  EXPECT_EQ(m(1, 1), 25.0);
  EXPECT_EQ(m(2, 2), 9.0);
  EXPECT_EQ(m(0, 1), -1.5);
  EXPECT_EQ(m(1, 2), -1.5);
  EXPECT_EQ(m(0, 2), -4.0);
  EXPECT_EQ(m, m.transpose());
}

TEST(CouplingMatrix, SymmetricSignFlagFlipsOffDiagonal) {
  const Mat3 g = coupling_matrix(QuenchSpec({1, 1, 1}, {1, 2, 3}, 1.0), 0.0).matrix();
  const Mat3 s = coupling_matrix(
                     QuenchSpec({1, 1, 1}, {1, 2, 3}, 1.0, CouplingSign::paper_symmetric), 0.0)
                     .matrix();
  EXPECT_EQ(g.diagonal(), s.diagonal());
  EXPECT_EQ(g(0, 1), -s(0, 1));
  EXPECT_EQ(g(1, 2), -3.0);
}

TEST(CouplingMatrix, PostQuenchIsEpsilonSquaredTimesInitial) {
  const QuenchSpec s = testing::asymmetric(0.37);
  const Mat3 m0 = coupling_matrix(s, 0.0).matrix();
  const Mat3 m1 = coupling_matrix(s, 0.2).matrix();
  const Mat3 m2 = coupling_matrix(s, 17.0).matrix();
  EXPECT_EQ(m1, m2);
  EXPECT_LT((m1 - 0.37 * 0.37 * m0).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_DOUBLE_EQ(m1(1, 1), std::pow(quenched_frequency(s, 2, 0.2), 2));
}

TEST(CouplingMatrix, RejectsAsymmetricInput) {
  Mat3 m = Mat3::Identity();
  m(0, 1) = 1e-3;
  EXPECT_THROW(CouplingMatrix{m}, InvalidArgument);
}

TEST(Sylvester, IdentityIsPositive) {
  const PositivityReport r = sylvester_positivity(CouplingMatrix(Mat3::Identity()));
  EXPECT_TRUE(r.positive);
  EXPECT_EQ(r.minors[0], 1.0);
  EXPECT_EQ(r.minors[1], 1.0);
  EXPECT_NEAR(r.minors[2], 1.0, 1e-15);
}

TEST(Sylvester, NonSymmetricFigureSetFails) {
  for (auto sign : {CouplingSign::paper_general, CouplingSign::paper_symmetric}) {
    const QuenchSpec s({0.5, 0.8, 0.35}, {1, 3, 2}, 0.5, sign);
    EXPECT_FALSE(sylvester_positivity(coupling_matrix(s, 0.0)).positive);
  }
}

TEST(Sylvester, HookeUnderGeneralSignHasZeroMode) {
  const double w = std::sqrt(3.0);
  const PositivityReport r =
      sylvester_positivity(coupling_matrix(QuenchSpec({w, w, w}, {1.5, 1.5, 1.5}, 1.0), 0.0));
  EXPECT_NEAR(r.minors[0], 3.0, 1e-14);
  EXPECT_NEAR(r.minors[1], 6.75, 1e-13);
  EXPECT_NEAR(r.minors[2], 0.0, 1e-12);
  EXPECT_FALSE(r.positive);
  EXPECT_TRUE(sylvester_positivity(coupling_matrix(testing::hooke(1.5, 1.0), 0.0)).positive);
}

}  // namespace
}  // namespace triosc
