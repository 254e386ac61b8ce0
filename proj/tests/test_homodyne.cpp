#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "triosc/errors.hpp"
#include "triosc/homodyne.hpp"
#include "triosc/pipeline.hpp"

namespace triosc {
namespace {

using testing::asymmetric;
using testing::bisymmetric;
using testing::hooke;

struct Case {
  QuenchSpec spec;
  double t;
  double r_a;
};

const Case kFrozen[] = {
    {hooke(1.5, 1.0), 0.7, -0.0444444444444444444},
    {bisymmetric(3, 5, 1.5, 4, 0.01), 25.0, -4.7486630824604975664},
    {bisymmetric(3, 5, 1.5, 0, 0.1), 5.0, -0.96814489077069964238},
    {asymmetric(0.3), 2.0, -0.2199074374617038669},
};

TEST(Homodyne, FrozenShifts) {
  for (const auto& c : kFrozen) {
    const PurityShifts s = purity_shifts(QuenchedSystem(c.spec).state(c.t).g());
    EXPECT_NEAR(s.r_a, c.r_a, 1e-9 * std::max(1.0, std::abs(c.r_a)));
  }
}

TEST(Homodyne, PseudoinverseAndExplicitAgree) {
  for (const auto& c : kFrozen) {
    const QuenchedSystem sys(c.spec);
    for (double t : {0.0, 0.5 * c.t, c.t, 2.0 * c.t}) {
      const GaussianState st = sys.state(t);
      const Mat4 a = homodyne_output_pseudoinverse(st.cov());
      const Mat4 b = homodyne_output_explicit(st.g());
      const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
      EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12 * scale) << "t=" << t;
    }
  }
}

TEST(Homodyne, ShiftIdentity) {
  const QuenchedSystem sys(asymmetric(0.3));
  for (double t : {0.0, 1.0, 2.0, 6.0}) {
    const GaussianState st = sys.state(t);
    const HomodyneOutcome out = homodyne_x2(st);
    const PurityShifts s = purity_shifts(st.g());
    const double pa = purity_det(st.mode_cov(Mode::A));
    const double pc = purity_det(st.mode_cov(Mode::C));
    EXPECT_NEAR(std::pow(out.purity_out[0], -2), std::pow(pa, -2) + s.r_a, 1e-10);
    EXPECT_NEAR(std::pow(out.purity_out[1], -2), std::pow(pc, -2) + s.r_c, 1e-10);
    EXPECT_DOUBLE_EQ(out.shift_a, s.r_a);
    EXPECT_DOUBLE_EQ(out.shift_c, s.r_c);
  }
}

TEST(Homodyne, MeasurementNeverLowersPurity) {
  const QuenchedSystem sys(bisymmetric(3, 5, 1.5, 4, 0.01));
  for (int i = 0; i <= 20; ++i) {
    const QuantityReport r = sys.report(2.5 * i);
    EXPECT_LE(r.homodyne.shift_a, 1e-12);
    EXPECT_GE(r.homodyne.purity_out[0], r.purity[0] - 1e-12);
    EXPECT_GE(r.homodyne.purity_out[1], r.purity[2] - 1e-12);
  }
}

TEST(Homodyne, BisymmetricShiftsMatch) {
  const QuenchedSystem sys(bisymmetric(3, 5, 1.5, 4, 0.01));
  for (double t : {3.0, 25.0, 41.0}) {
    const PurityShifts s = purity_shifts(sys.state(t).g());
    EXPECT_NEAR(s.r_a, s.r_c, 1e-9 * std::max(1.0, std::abs(s.r_a)));
  }
}

TEST(Homodyne, UncoupledCentralModeLeavesOthersAlone) {
  // Only A and C couple; measuring B changes nothing.
  const GaussianState st = QuenchedSystem(QuenchSpec({3, 5, 2.5}, {0, 1.5, 0}, 0.2)).state(3.0);
  const HomodyneOutcome out = homodyne_x2(st);
  EXPECT_NEAR(out.shift_a, 0.0, 1e-14);
  EXPECT_NEAR(out.shift_c, 0.0, 1e-14);
  Mat4 kept;
  const int idx[4] = {0, 1, 4, 5};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) kept(i, j) = st.cov()(idx[i], idx[j]);
  }
  EXPECT_LT((out.cov_out - kept).norm(), 1e-12);
}

TEST(Homodyne, FullyDecoupledResourcesUnchanged) {
  const GaussianState st = QuenchedSystem(QuenchSpec({1, 2, 3}, {0, 0, 0}, 0.3)).state(2.0);
  const HomodyneOutcome out = homodyne_x2(st);
  const ModeResourceReport in = mode_resources(st.mode_cov(Mode::A));
  const ModeResourceReport after = output_mode_report(out, 0);
  EXPECT_NEAR(after.svn, in.svn, 1e-14);
  EXPECT_NEAR(after.coherence, in.coherence, 1e-12);
  const RedistributionWitness w = redistribution_witness(in, after);
  EXPECT_NEAR(w.delta_coherence, 0.0, 1e-12);
  EXPECT_NEAR(w.delta_svn, 0.0, 1e-12);
  EXPECT_EQ(redistribution_witness(in, in).ratio, 0.0);
}

TEST(Homodyne, DecoupledVacuumOutput) {
  const GaussianState st = QuenchedSystem(QuenchSpec({1, 1, 1}, {0, 0, 0}, 1.0)).state(1.0);
  const HomodyneOutcome out = homodyne_x2(st, PopulationConvention::vacuum_referenced);
  for (int m = 0; m < 2; ++m) {
    EXPECT_NEAR(out.svn_out[m], 0.0, 1e-14);
    EXPECT_NEAR(out.coherence_out[m], 0.0, 1e-14);
    EXPECT_NEAR(out.nbar_out[m], 0.0, 1e-14);
  }
  EXPECT_EQ(out.shift_a, 0.0);
  EXPECT_EQ(out.shift_c, 0.0);
}

TEST(Homodyne, SingularQuadratureGuard) {
  Mat6 cov = Mat6::Identity();
  cov(2, 2) = 1e-13;
  EXPECT_THROW(homodyne_output_pseudoinverse(cov), SingularQuadrature);
}

TEST(Homodyne, OutputModeIndexChecked) {
  const HomodyneOutcome out = homodyne_x2(QuenchedSystem(asymmetric(0.3)).state(2.0));
  EXPECT_THROW(output_mode_report(out, 2), InvalidArgument);
}

TEST(Resources, VacuumMode) {
  const ModeResourceReport r = mode_resources(Mat2::Identity());
  EXPECT_NEAR(r.maxidness, 1.0, 1e-15);
  EXPECT_EQ(r.svn, 0.0);
  EXPECT_EQ(r.nbar, 0.5);
  const ModeResourceReport v =
      mode_resources(Mat2::Identity(), PopulationConvention::vacuum_referenced);
  EXPECT_EQ(v.nbar, 0.0);
  EXPECT_NEAR(v.coherence, 0.0, 1e-15);
}

TEST(Resources, WitnessRatio) {
  ModeResourceReport in{2.0, 1.0, 3.0, 1.0};
  ModeResourceReport out{1.5, 0.5, 2.0, 0.8};
  const RedistributionWitness w = redistribution_witness(in, out);
  EXPECT_DOUBLE_EQ(w.delta_coherence, -1.0);
  EXPECT_DOUBLE_EQ(w.delta_svn, -0.5);
  EXPECT_DOUBLE_EQ(w.ratio, 2.0);
}

}  // namespace
}  // namespace triosc
