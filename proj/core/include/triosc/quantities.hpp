#pragma once

#include <array>
#include <span>

#include "triosc/ermakov.hpp"
#include "triosc/gaussian.hpp"
#include "triosc/linalg.hpp"

namespace triosc {

/// Closed-form marginal purity of mode k from the rotation and the three
/// Ermakov modes (sigma is the t = 0 normal frequency):
///   P_k^-2 = 1 + sum_{m<j} R_mk^2 R_jk^2 [ (sqrt(s_j/s_m) rho_m/rho_j
///            - sqrt(s_m/s_j) rho_j/rho_m)^2 + (rho_m rho'_j - rho_j rho'_m)^2 / (s_j s_m) ]
double purity_closed_form(const Mat3& r, const std::array<ErmakovMode, 3>& modes, Mode k);

/// 1 / sqrt(det sigma_k). Throws NotPositiveDefinite.
double purity_det(const Mat2& sigma_k);

/// 1 - P. Throws DomainError outside (0, 1 + 1e-9].
double linear_entropy(double purity);

/// ((a+1)/2) ln((a+1)/2) - ((a-1)/2) ln((a-1)/2), with 0 ln 0 = 0.
/// Also the entropy of a single-mode Gaussian with symplectic eigenvalue a.
/// Throws DomainError for a < 1 - 1e-9.
double von_neumann(double maxidness);

struct TriangleReport {
  /// s1[k] = a_k - |a_i - a_j| - 1, s2[k] = a_i + a_j - a_k - 1.
  std::array<double, 3> s1{};
  std::array<double, 3> s2{};
  bool ok = false;
};

TriangleReport triangle_check(const std::array<double, 3>& maxidness);

/// |a_i - a_j| + 1 < a_k < sqrt(a_i^2 + a_j^2 - 1) for every k, a = 1/P.
bool full_inseparability_check(const std::array<double, 3>& purities);

enum class EntanglementClass {
  c1_fully_inseparable,
  c2_one_mode_biseparable,
  c3_two_mode_biseparable,
  c4_three_mode_biseparable,
  c5_fully_separable,
  indeterminate,
};

const char* to_string(EntanglementClass c);

struct Classification {
  EntanglementClass cls = EntanglementClass::indeterminate;
  /// Smallest symplectic eigenvalue of the partial transpose for A|BC,
  /// B|AC and C|AB.
  std::array<double, 3> nu_tilde_min{};
};

/// PPT-based class of a pure three-mode state. A split counts as separable
/// only when nu~ > 1 + 1e-7 or the singled-out mode is exactly uncorrelated;
/// nu~ in [1 - 1e-7, 1 + 1e-7] otherwise gives `indeterminate`.
Classification classify(const GaussianState& state);

/// How the product defining delta in the tripartite E2 is read.
///   outer_parenthesization: prod [(1 + (-1)^mu) P1 + (-1)^nu P2]
///   unit_offset:            prod [1 + (-1)^mu P1 + (-1)^nu P2]
///   maxidness_heron:        prod [(a1 + (-1)^mu a2)^2 - (a1 + (-1)^nu)^2]
/// with a = 1/P, index 1 the lateral and 2 the central mode.
enum class E2Reading { outer_parenthesization, unit_offset, maxidness_heron };

const char* to_string(E2Reading r);

enum class E2Status { ok, domain_error, symmetry_violated };

const char* to_string(E2Status s);

struct TripartiteE2 {
  double value = 0.0;  // NaN unless status == ok
  E2Status status = E2Status::domain_error;
  double h = 0.0;
  double delta = 0.0;
};

/// E2 = ln(8 / (P1^2 P2 h)),
/// h = 4 a1^2 (1 + a2^2) + a2^2 (2 - a2^2) - sqrt(delta) - 1.
/// Status domain_error when delta < 0 or h <= 0.
TripartiteE2 tripartite_e2(double p_lateral, double p_central,
                           E2Reading reading = E2Reading::maxidness_heron);

/// Bi-symmetric form taking (P_A, P_B, P_C); symmetry_violated when
/// |P_A - P_C| > 1e-9.
TripartiteE2 tripartite_e2(const std::array<double, 3>& purities,
                           E2Reading reading = E2Reading::maxidness_heron);

/// half_trace: n = (G_{2j,2j} + G_{2j-1,2j-1} - 1) / 2.
/// vacuum_referenced: n = (G_{2j,2j} + G_{2j-1,2j-1} - 2) / 4, zero for the
/// vacuum of a unit-frequency oscillator.
enum class PopulationConvention { half_trace, vacuum_referenced };

const char* to_string(PopulationConvention c);

/// Mean population from the trace of a single-mode covariance block.
double mean_population_from_trace(double trace, PopulationConvention c);

double mean_population(const Mat6& g, Mode j,
                       PopulationConvention c = PopulationConvention::half_trace);

/// (n+1) ln(n+1) - n ln n, the entropy of a thermal state with population n.
double thermal_entropy(double nbar);

/// Sum of von_neumann(nu) over a symplectic spectrum.
double gaussian_entropy(std::span<const double> nu);

/// C = -S + sum_i thermal_entropy(n_i). Throws NotPure if S > 1e-6.
double global_coherence(const Mat6& g, std::span<const double> nu,
                        PopulationConvention c = PopulationConvention::half_trace);

struct Uncertainty {
  /// (1/2) sqrt(sigma_xx sigma_pp).
  double delta = 0.5;
  /// det sigma_j; Heisenberg holds iff >= 1 - 1e-9.
  double det = 1.0;
  bool heisenberg_ok = true;
};

Uncertainty uncertainty_product(const Mat2& sigma_j);

}  // namespace triosc
