#include "triosc/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "triosc/errors.hpp"

namespace triosc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// x ln x with the 0 ln 0 = 0 limit.
double xlogx(double x) { return x < 1e-300 ? 0.0 : x * std::log(x); }

}  // namespace

double purity_closed_form(const Mat3& r, const std::array<ErmakovMode, 3>& modes, Mode k) {
  const int col = static_cast<int>(k);
  double inv2 = 1.0;
  for (int m = 0; m < 3; ++m) {
    for (int j = m + 1; j < 3; ++j) {
      const ErmakovMode& a = modes[m];
      const ErmakovMode& b = modes[j];
      if (!(a.sigma0 > 0.0) || !(b.sigma0 > 0.0)) {
        throw NonpositiveFrequency("normal frequencies must be > 0");
      }
      const double w = r(m, col) * r(m, col) * r(j, col) * r(j, col);
      const double x = std::sqrt(b.sigma0 / a.sigma0) * a.rho / b.rho -
                       std::sqrt(a.sigma0 / b.sigma0) * b.rho / a.rho;
      const double y = a.rho * b.rhodot - b.rho * a.rhodot;
      inv2 += w * (x * x + y * y / (a.sigma0 * b.sigma0));
    }
  }
  return 1.0 / std::sqrt(inv2);
}

double purity_det(const Mat2& sigma_k) {
  const double det = sigma_k(0, 0) * sigma_k(1, 1) - sigma_k(0, 1) * sigma_k(1, 0);
  if (!(sigma_k(0, 0) > 0.0) || !(det > 0.0)) {
    throw NotPositiveDefinite("single-mode covariance is not positive definite");
  }
  return 1.0 / std::sqrt(det);
}

double linear_entropy(double purity) {
  if (!(purity > 0.0) || purity > 1.0 + 1e-9) {
    throw DomainError("purity must lie in (0, 1]");
  }
  return 1.0 - purity;
}

double von_neumann(double a) {
  if (!(a >= 1.0 - 1e-9) || !std::isfinite(a)) {
    throw DomainError("maxidness must be >= 1");
  }
  a = std::max(a, 1.0);
  return xlogx((a + 1.0) / 2.0) - xlogx((a - 1.0) / 2.0);
}

TriangleReport triangle_check(const std::array<double, 3>& a) {
  TriangleReport out;
  out.ok = true;
  for (int k = 0; k < 3; ++k) {
    const double ai = a[(k + 1) % 3];
    const double aj = a[(k + 2) % 3];
    out.s1[k] = a[k] - std::abs(ai - aj) - 1.0;
    out.s2[k] = ai + aj - a[k] - 1.0;
    out.ok = out.ok && out.s1[k] >= -1e-9 && out.s2[k] >= -1e-9;
  }
  return out;
}

bool full_inseparability_check(const std::array<double, 3>& p) {
  const std::array<double, 3> a{1.0 / p[0], 1.0 / p[1], 1.0 / p[2]};
  for (int k = 0; k < 3; ++k) {
    const double ai = a[(k + 1) % 3];
    const double aj = a[(k + 2) % 3];
    const bool lower = std::abs(ai - aj) + 1.0 < a[k];
    const bool upper = a[k] < std::sqrt(ai * ai + aj * aj - 1.0);
    if (!(lower && upper)) return false;
  }
  return true;
}

const char* to_string(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::c1_fully_inseparable: return "C1";
    case EntanglementClass::c2_one_mode_biseparable: return "C2";
    case EntanglementClass::c3_two_mode_biseparable: return "C3";
    case EntanglementClass::c4_three_mode_biseparable: return "C4";
    case EntanglementClass::c5_fully_separable: return "C5";
    case EntanglementClass::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Classification classify(const GaussianState& state) {
  Classification out;
  const Mat6& s = state.cov();
  const double scale = s.cwiseAbs().maxCoeff();
  int separable = 0;
  bool boundary = false;
  for (int k = 0; k < 3; ++k) {
    const auto mode = static_cast<Mode>(k);
    out.nu_tilde_min[k] = ppt_test(state, mode).nu_tilde_min;
    // A mode with no correlations at all is a product factor; its nu~ sits
    // exactly on 1 and must not be mistaken for the boundary.
    double corr = 0.0;
    for (int j = 0; j < 3; ++j) {
      if (j != k) corr = std::max(corr, s.block<2, 2>(2 * k, 2 * j).cwiseAbs().maxCoeff());
    }
    if (corr <= 1e-12 * scale) {
      ++separable;
    } else if (out.nu_tilde_min[k] > 1.0 + 1e-7) {
      ++separable;
    } else if (out.nu_tilde_min[k] >= 1.0 - 1e-7) {
      boundary = true;
    }
  }
  if (boundary) {
    out.cls = EntanglementClass::indeterminate;
  } else if (separable == 0) {
    out.cls = EntanglementClass::c1_fully_inseparable;
  } else if (separable == 1) {
    out.cls = EntanglementClass::c2_one_mode_biseparable;
  } else if (separable == 3) {
    out.cls = EntanglementClass::c5_fully_separable;
  } else {
    // Two separable splits cannot happen for a pure state.
    out.cls = EntanglementClass::indeterminate;
  }
  return out;
}

const char* to_string(E2Reading r) {
  switch (r) {
    case E2Reading::outer_parenthesization: return "outer_parenthesization";
    case E2Reading::unit_offset: return "unit_offset";
    case E2Reading::maxidness_heron: return "maxidness_heron";
  }
  return "maxidness_heron";
}

const char* to_string(E2Status s) {
  switch (s) {
    case E2Status::ok: return "ok";
    case E2Status::domain_error: return "domain_error";
    case E2Status::symmetry_violated: return "symmetry_violated";
  }
  return "domain_error";
}

TripartiteE2 tripartite_e2(double p1, double p2, E2Reading reading) {
  if (!(p1 > 0.0) || !(p2 > 0.0) || p1 > 1.0 + 1e-9 || p2 > 1.0 + 1e-9) {
    throw DomainError("purities must lie in (0, 1]");
  }
  const double a1 = 1.0 / p1;
  const double a2 = 1.0 / p2;
  double delta = 1.0;
  for (int mu = 0; mu < 2; ++mu) {
    const double smu = mu == 0 ? 1.0 : -1.0;
    for (int nu = 0; nu < 2; ++nu) {
      const double snu = nu == 0 ? 1.0 : -1.0;
      switch (reading) {
        case E2Reading::outer_parenthesization:
          delta *= (1.0 + smu) * p1 + snu * p2;
          break;
        case E2Reading::unit_offset:
          delta *= 1.0 + smu * p1 + snu * p2;
          break;
        case E2Reading::maxidness_heron: {
          const double u = a1 + smu * a2;
          const double v = a1 + snu;
          delta *= u * u - v * v;
          break;
        }
      }
    }
  }
  TripartiteE2 out;
  out.delta = delta;
  out.value = kNaN;
  if (delta < 0.0) {
    out.h = kNaN;
    out.status = E2Status::domain_error;
    return out;
  }
  out.h = 4.0 * a1 * a1 * (1.0 + a2 * a2) + a2 * a2 * (2.0 - a2 * a2) - std::sqrt(delta) - 1.0;
  if (!(out.h > 0.0)) {
    out.status = E2Status::domain_error;
    return out;
  }
  out.value = std::log(8.0 / (p1 * p1 * p2 * out.h));
  out.status = E2Status::ok;
  return out;
}

TripartiteE2 tripartite_e2(const std::array<double, 3>& p, E2Reading reading) {
  if (std::abs(p[0] - p[2]) > 1e-9) {
    TripartiteE2 out;
    out.value = kNaN;
    out.h = kNaN;
    out.delta = kNaN;
    out.status = E2Status::symmetry_violated;
    return out;
  }
  return tripartite_e2(0.5 * (p[0] + p[2]), p[1], reading);
}

const char* to_string(PopulationConvention c) {
  return c == PopulationConvention::half_trace ? "half_trace" : "vacuum_referenced";
}

double mean_population_from_trace(double trace, PopulationConvention c) {
  return c == PopulationConvention::half_trace ? 0.5 * (trace - 1.0) : 0.25 * (trace - 2.0);
}

double mean_population(const Mat6& g, Mode j, PopulationConvention c) {
  const int k = 2 * static_cast<int>(j);
  return mean_population_from_trace(g(k, k) + g(k + 1, k + 1), c);
}

double thermal_entropy(double nbar) {
  if (!(nbar >= -1e-10)) throw DomainError("mean population must be >= 0");
  nbar = std::max(nbar, 0.0);
  return xlogx(nbar + 1.0) - xlogx(nbar);
}

double gaussian_entropy(std::span<const double> nu) {
  double s = 0.0;
  for (double v : nu) s += von_neumann(v);
  return s;
}

double global_coherence(const Mat6& g, std::span<const double> nu, PopulationConvention c) {
  const double s = gaussian_entropy(nu);
  if (s > 1e-6) throw NotPure("global entropy " + std::to_string(s) + " of a mixed state");
  double total = -s;
  for (int j = 0; j < 3; ++j) total += thermal_entropy(mean_population(g, static_cast<Mode>(j), c));
  return total;
}

Uncertainty uncertainty_product(const Mat2& s) {
  const double det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
  if (!(s(0, 0) > 0.0) || !(det > 0.0)) {
    throw NotPositiveDefinite("single-mode covariance is not positive definite");
  }
  return {0.5 * std::sqrt(s(0, 0) * s(1, 1)), det, det >= 1.0 - 1e-9};
}

}  // namespace triosc
