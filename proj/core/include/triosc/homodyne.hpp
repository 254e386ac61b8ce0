#pragma once

#include <array>

#include "triosc/gaussian.hpp"
#include "triosc/linalg.hpp"
#include "triosc/quantities.hpp"

namespace triosc {

/// Perfect homodyne detection of x2 on the central mode B.
/// `cov_out` is the conditional covariance of (x1, p1, x3, p3); index 0 of
/// the per-mode arrays is mode A and index 1 is mode C.
struct HomodyneOutcome {
  Mat4 cov_out;
  double shift_a = 0.0;
  double shift_c = 0.0;
  std::array<double, 2> purity_out{};
  std::array<double, 2> svn_out{};
  std::array<double, 2> coherence_out{};
  std::array<double, 2> nbar_out{};
};

/// A - C (pi B pi)^+ C^T, where (pi B pi)^+ = diag(1 / B11, 0).
/// Throws SingularQuadrature if B11 < 1e-12.
Mat4 homodyne_output_pseudoinverse(const Mat6& cov);

/// The same conditional covariance written entry by entry in terms of G.
Mat4 homodyne_output_explicit(const Mat6& g);

struct PurityShifts {
  double r_a = 0.0;
  double r_c = 0.0;
};

/// R_A = -(G11 G24^2 + G22 G23^2 - 2 G12 G24 G23) / G44 and the
/// mode-C analogue, so that (P_out)^-2 = P^-2 + R.
PurityShifts purity_shifts(const Mat6& g);

HomodyneOutcome homodyne_x2(const GaussianState& state,
                            PopulationConvention c = PopulationConvention::half_trace);

/// Entropy, coherence and population of one mode, before or after measurement.
struct ModeResourceReport {
  double maxidness = 1.0;
  double svn = 0.0;
  double coherence = 0.0;
  double nbar = 0.0;
};

/// Single-mode report from a 2x2 covariance block. Throws NotPositiveDefinite.
ModeResourceReport mode_resources(const Mat2& sigma,
                                  PopulationConvention c = PopulationConvention::half_trace);

/// Report of mode A (index 0) or C (index 1) of an outcome.
ModeResourceReport output_mode_report(const HomodyneOutcome& outcome, int m);

struct RedistributionWitness {
  double delta_coherence = 0.0;
  double delta_svn = 0.0;
  /// |dC| / max(|dS|, 1e-15); 0 when both changes vanish.
  double ratio = 0.0;
};

RedistributionWitness redistribution_witness(const ModeResourceReport& in,
                                             const ModeResourceReport& out);

}  // namespace triosc
