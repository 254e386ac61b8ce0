#include "triosc/homodyne.hpp"

#include <algorithm>
#include <cmath>

#include "triosc/errors.hpp"

namespace triosc {

namespace {

// Covariance indices of (x1, p1, x3, p3) and of x2.
constexpr std::array<int, 4> kKept{0, 1, 4, 5};
constexpr int kX2 = 2;

void require_quadrature(double b11) {
  if (!(b11 >= 1e-12)) throw SingularQuadrature("x2 variance is numerically zero");
}

}  // namespace

Mat4 homodyne_output_pseudoinverse(const Mat6& cov) {
  const double b11 = cov(kX2, kX2);
  require_quadrature(b11);
  Mat4 a;
  Eigen::Matrix<double, 4, 2> c;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = cov(kKept[i], kKept[j]);
    c(i, 0) = cov(kKept[i], 2);
    c(i, 1) = cov(kKept[i], 3);
  }
  Mat2 pinv = Mat2::Zero();
  pinv(0, 0) = 1.0 / b11;
  Mat4 out = a - c * pinv * c.transpose();
  return 0.5 * (out + out.transpose());
}

Mat4 homodyne_output_explicit(const Mat6& g) {
  // 1-based accessor matching the usual G_ij labels.
  auto G = [&g](int i, int j) { return g(i - 1, j - 1); };
  const double g44 = G(4, 4);
  require_quadrature(g44);
  Mat4 o;
  o(0, 0) = G(2, 2) - G(2, 4) * G(2, 4) / g44;
  o(0, 1) = -G(1, 2) + G(2, 4) * G(2, 3) / g44;
  o(0, 2) = G(2, 6) - G(2, 4) * G(4, 6) / g44;
  o(0, 3) = -G(2, 5) + G(2, 4) * G(3, 6) / g44;
  o(1, 1) = G(1, 1) - G(2, 3) * G(2, 3) / g44;
  o(1, 2) = -G(2, 5) + G(2, 3) * G(4, 6) / g44;
  o(1, 3) = G(1, 5) - G(2, 3) * G(3, 6) / g44;
  o(2, 2) = G(6, 6) - G(4, 6) * G(4, 6) / g44;
  o(2, 3) = -G(5, 6) + G(4, 6) * G(3, 6) / g44;
  o(3, 3) = G(5, 5) - G(3, 6) * G(3, 6) / g44;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) o(i, j) = o(j, i);
  }
  return o;
}

PurityShifts purity_shifts(const Mat6& g) {
  auto G = [&g](int i, int j) { return g(i - 1, j - 1); };
  const double g44 = G(4, 4);
  require_quadrature(g44);
  PurityShifts r;
  r.r_a = -(G(1, 1) * G(2, 4) * G(2, 4) + G(2, 2) * G(2, 3) * G(2, 3) -
            2.0 * G(1, 2) * G(2, 4) * G(2, 3)) /
          g44;
  r.r_c = -(G(5, 5) * G(4, 6) * G(4, 6) + G(6, 6) * G(3, 6) * G(3, 6) -
            2.0 * G(5, 6) * G(4, 6) * G(3, 6)) /
          g44;
  return r;
}

ModeResourceReport mode_resources(const Mat2& sigma, PopulationConvention c) {
  ModeResourceReport r;
  r.maxidness = 1.0 / purity_det(sigma);
  r.svn = von_neumann(r.maxidness);
  r.nbar = mean_population_from_trace(sigma(0, 0) + sigma(1, 1), c);
  r.coherence = thermal_entropy(r.nbar) - r.svn;
  return r;
}

HomodyneOutcome homodyne_x2(const GaussianState& state, PopulationConvention c) {
  HomodyneOutcome out;
  out.cov_out = homodyne_output_pseudoinverse(state.cov());
  const PurityShifts r = purity_shifts(state.g());
  out.shift_a = r.r_a;
  out.shift_c = r.r_c;
  for (int m = 0; m < 2; ++m) {
    const ModeResourceReport rep = mode_resources(out.cov_out.block<2, 2>(2 * m, 2 * m), c);
    out.purity_out[m] = 1.0 / rep.maxidness;
    out.svn_out[m] = rep.svn;
    out.coherence_out[m] = rep.coherence;
    out.nbar_out[m] = rep.nbar;
  }
  return out;
}

ModeResourceReport output_mode_report(const HomodyneOutcome& outcome, int m) {
  if (m != 0 && m != 1) throw InvalidArgument("output mode index must be 0 (A) or 1 (C)");
  ModeResourceReport r;
  r.maxidness = 1.0 / outcome.purity_out[m];
  r.svn = outcome.svn_out[m];
  r.coherence = outcome.coherence_out[m];
  r.nbar = outcome.nbar_out[m];
  return r;
}

RedistributionWitness redistribution_witness(const ModeResourceReport& in,
                                             const ModeResourceReport& out) {
  RedistributionWitness w;
  w.delta_coherence = out.coherence - in.coherence;
  w.delta_svn = out.svn - in.svn;
  if (w.delta_coherence != 0.0 || w.delta_svn != 0.0) {
    w.ratio = std::abs(w.delta_coherence) / std::max(std::abs(w.delta_svn), 1e-15);
  }
  return w;
}

}  // namespace triosc
