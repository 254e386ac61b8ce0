#include "triosc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "triosc/errors.hpp"

namespace triosc {

QuenchedSystem::QuenchedSystem(const QuenchSpec& spec) : spec_(spec) {
  const CouplingMatrix m = coupling_matrix(spec, 0.0);
  const PositivityReport pos = sylvester_positivity(m);
  if (!pos.positive) {
    throw UnphysicalParameters("coupling matrix is not positive definite (leading minors " +
                                   std::to_string(pos.minors[0]) + ", " +
                                   std::to_string(pos.minors[1]) + ", " +
                                   std::to_string(pos.minors[2]) + ")",
                               pos.minors);
  }
  modes_ = triosc::normal_modes(m);
  for (int i = 0; i < 3; ++i) {
    if (!(modes_.sigma2[i] > 0.0)) {
      throw UnphysicalParameters("nonpositive normal frequency", pos.minors);
    }
    sigma0_[i] = std::sqrt(modes_.sigma2[i]);
  }
}

std::array<ErmakovMode, 3> QuenchedSystem::ermakov_modes(double t) const {
  const double e = spec_.epsilon();
  return {ErmakovMode::at(sigma0_[0], e, t), ErmakovMode::at(sigma0_[1], e, t),
          ErmakovMode::at(sigma0_[2], e, t)};
}

GaussianState QuenchedSystem::state(double t) const {
  return GaussianState(modes_.rotation, s_blocks(ermakov_modes(t)));
}

QuantityReport QuenchedSystem::report(double t, const ReportOptions& options) const {
  QuantityReport r;
  r.t = t;
  r.epsilon = spec_.epsilon();
  const std::array<ErmakovMode, 3> em = ermakov_modes(t);
  const GaussianState st(modes_.rotation, s_blocks(em));

  for (int k = 0; k < 3; ++k) {
    const auto mode = static_cast<Mode>(k);
    const Mat2 sk = st.mode_cov(mode);
    r.purity[k] = purity_det(sk);
    r.purity_closed_form[k] = purity_closed_form(modes_.rotation, em, mode);
    r.maxidness[k] = 1.0 / r.purity[k];
    r.linear_entropy[k] = linear_entropy(std::min(r.purity[k], 1.0));
    r.von_neumann[k] = von_neumann(r.maxidness[k]);
    r.nbar[k] = mean_population(st.g(), mode, options.population);
    r.uncertainty[k] = uncertainty_product(sk);
  }
  r.triangle = triangle_check(r.maxidness);
  r.fully_inseparable = full_inseparability_check(r.purity);
  r.classification = classify(st);
  r.e2 = tripartite_e2(r.purity, options.e2_reading);

  r.det_g = st.g().determinant();
  r.det_sigma = st.cov().determinant();
  const std::vector<double> nu = symplectic_eigenvalues(st.cov());
  for (int k = 0; k < 3; ++k) r.symplectic[k] = nu[k];
  r.physical = physicality(st.cov());
  r.coherence = global_coherence(st.g(), nu, options.population);

  r.homodyne = homodyne_x2(st, options.population);
  r.input_a = mode_resources(st.mode_cov(Mode::A), options.population);
  return r;
}

}  // namespace triosc
