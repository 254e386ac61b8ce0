#pragma once

#include <array>
#include <string>

#include "triosc/ermakov.hpp"
#include "triosc/gaussian.hpp"
#include "triosc/homodyne.hpp"
#include "triosc/model.hpp"
#include "triosc/quantities.hpp"
#include "triosc/spectral.hpp"

namespace triosc {

struct ReportOptions {
  E2Reading e2_reading = E2Reading::maxidness_heron;
  PopulationConvention population = PopulationConvention::half_trace;
};

/// Every scalar reported at one (t, epsilon) point.
struct QuantityReport {
  double t = 0.0;
  double epsilon = 1.0;

  std::array<double, 3> purity{};
  std::array<double, 3> purity_closed_form{};
  std::array<double, 3> maxidness{};
  std::array<double, 3> linear_entropy{};
  std::array<double, 3> von_neumann{};
  TriangleReport triangle;
  bool fully_inseparable = false;
  Classification classification;
  TripartiteE2 e2;
  std::array<double, 3> nbar{};
  double coherence = 0.0;
  std::array<Uncertainty, 3> uncertainty{};

  double det_g = 1.0;
  double det_sigma = 1.0;
  std::array<double, 3> symplectic{};
  PhysicalityReport physical;

  HomodyneOutcome homodyne;
  /// Mode A before measurement, for comparison with the homodyne output.
  ModeResourceReport input_a;
};

/// A quench scenario with its t = 0 normal-mode data, which stays valid for
/// every t > 0 because the quench only rescales the coupling matrix.
class QuenchedSystem {
 public:
  /// Throws UnphysicalParameters when the t = 0 coupling matrix is not
  /// positive definite.
  explicit QuenchedSystem(const QuenchSpec& spec);

  const QuenchSpec& spec() const noexcept { return spec_; }
  const NormalModeData& normal_modes() const noexcept { return modes_; }
  /// sigma_i(0) in branch order.
  const std::array<double, 3>& sigma0() const noexcept { return sigma0_; }

  std::array<ErmakovMode, 3> ermakov_modes(double t) const;
  GaussianState state(double t) const;
  QuantityReport report(double t, const ReportOptions& options = {}) const;

 private:
  QuenchSpec spec_;
  NormalModeData modes_;
  std::array<double, 3> sigma0_{};
};

}  // namespace triosc
