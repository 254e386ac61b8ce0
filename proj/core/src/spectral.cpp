#include "triosc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <string>

#include "triosc/errors.hpp"

namespace triosc {

namespace {

constexpr double kTwoPiOverThree = 2.0 * std::numbers::pi / 3.0;

bool exactly_fully_symmetric(const Mat3& m) {
  return m(0, 0) == m(1, 1) && m(1, 1) == m(2, 2) && m(0, 1) == m(0, 2) &&
         m(0, 2) == m(1, 2);
}

void fix_leading_sign(Mat3& r, int row) {
  for (int c = 0; c < 3; ++c) {
    if (std::abs(r(row, c)) > 1e-12) {
      if (r(row, c) < 0.0) r.row(row) *= -1.0;
      return;
    }
  }
}

// Indices 0..2 sorted by decreasing value.
std::array<int, 3> descending_order(const std::array<double, 3>& v) {
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] > v[b]; });
  return idx;
}

}  // namespace

CubicCoefficients characteristic_coefficients(const CouplingMatrix& cm) {
  const Mat3& m = cm.matrix();
  CubicCoefficients k;
  k.b2 = m.trace();
  k.b1 = m(0, 0) * m(1, 1) + m(0, 0) * m(2, 2) + m(1, 1) * m(2, 2) - m(0, 1) * m(0, 1) -
         m(0, 2) * m(0, 2) - m(1, 2) * m(1, 2);
  k.b0 = -m.determinant();

  const Mat3 dev = m - (k.b2 / 3.0) * Mat3::Identity();
  k.p = 1.5 * dev.squaredNorm();
  k.q = 13.5 * dev.determinant();

  const double disc = k.p * k.p * k.p - k.q * k.q;
  if (disc < -1e-9 * std::max(1.0, k.q * k.q)) {
    throw DiscriminantNegative(
        "characteristic cubic has p^3 - q^2 < 0; input is not a real symmetric matrix");
  }
  k.phi = std::atan2(std::sqrt(std::max(disc, 0.0)), k.q) / 3.0;
  return k;
}

std::array<double, 3> normal_frequencies(const CouplingMatrix& m) {
  const CubicCoefficients k = characteristic_coefficients(m);
  const double amp = 2.0 * std::sqrt(k.p);
  return {(k.b2 + amp * std::cos(k.phi)) / 3.0,
          (k.b2 + amp * std::cos(k.phi + kTwoPiOverThree)) / 3.0,
          (k.b2 + amp * std::cos(k.phi - kTwoPiOverThree)) / 3.0};
}

JacobiResult jacobi_eigen(const Mat3& input) {
  Mat3 a = input;
  Mat3 v = Mat3::Identity();
  JacobiResult out;
  constexpr int kMaxSweeps = 50;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
    if (off == 0.0) break;
    out.sweeps = sweep + 1;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a(p, q);
        const double g = 100.0 * std::abs(apq);
        // Once converged past rounding, drop the element instead of rotating.
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        Mat3 j = Mat3::Identity();
        j(p, p) = c;
        j(q, q) = c;
        j(p, q) = s;
        j(q, p) = -s;
        a = j.transpose() * a * j;
        a(p, q) = a(q, p) = 0.0;
        v = v * j;
      }
    }
  }
  out.values = a.diagonal();
  out.vectors = v;
  return out;
}

Mat3 rotation_matrix(const CouplingMatrix& cm, const std::array<double, 3>& sigma2) {
  const Mat3& m = cm.matrix();
  const double tol = 1e-8 * std::max(cm.norm(), std::numeric_limits<double>::min());
  const std::array<int, 3> branch = descending_order(sigma2);
  Mat3 r;

  const bool all_equal = std::abs(sigma2[branch[0]] - sigma2[branch[2]]) <= tol;
  if (all_equal) {
    r = Mat3::Identity();
  } else if (exactly_fully_symmetric(m) && m(0, 1) != 0.0) {
    // (1,1,1) carries m00 + 2 m01; its orthogonal complement is degenerate.
    const double single = m(0, 0) + 2.0 * m(0, 1);
    int lone = 0;
    for (int i = 1; i < 3; ++i) {
      if (std::abs(sigma2[i] - single) < std::abs(sigma2[lone] - single)) lone = i;
    }
    const Vec3 v_sym = Vec3(1.0, 1.0, 1.0) / std::sqrt(3.0);
    const Vec3 v_anti = Vec3(0.0, 1.0, -1.0) / std::sqrt(2.0);
    const Vec3 v_mixed = Vec3(2.0, -1.0, -1.0) / std::sqrt(6.0);
    bool first = true;
    for (int i = 0; i < 3; ++i) {
      if (i == lone) {
        r.row(i) = v_sym.transpose();
      } else {
        r.row(i) = (first ? v_anti : v_mixed).transpose();
        first = false;
      }
    }
  } else {
    const JacobiResult jac = jacobi_eigen(m);
    const std::array<double, 3> jvals{jac.values(0), jac.values(1), jac.values(2)};
    const std::array<int, 3> jorder = descending_order(jvals);
    for (int k = 0; k < 3; ++k) {
      r.row(branch[k]) = jac.vectors.col(jorder[k]).transpose().normalized();
    }
    // Re-orthonormalise in branch order; only matters inside a degenerate pair.
    for (int k = 0; k < 3; ++k) {
      Vec3 row = r.row(branch[k]).transpose();
      for (int prev = 0; prev < k; ++prev) {
        const Vec3 u = r.row(branch[prev]).transpose();
        row -= u.dot(row) * u;
      }
      r.row(branch[k]) = row.normalized().transpose();
    }
  }

  fix_leading_sign(r, 0);
  fix_leading_sign(r, 2);
  if (r.determinant() < 0.0) r.row(1) *= -1.0;
  return r;
}

double squared_rotation_identity(const CouplingMatrix& cm, const std::array<double, 3>& sigma2,
                                 int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) {
    throw InvalidArgument("rotation indices must be in 1..3");
  }
  const Mat3& m = cm.matrix();
  const auto ii = static_cast<std::size_t>(i - 1);
  const double s = sigma2[ii];
  const double gap_tol = 1e-8 * std::max(cm.norm(), std::numeric_limits<double>::min());
  double denominator = 1.0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k == ii) continue;
    const double gap = s - sigma2[k];
    if (std::abs(gap) < gap_tol) {
      throw DegenerateSpectrum("eigenvalue " + std::to_string(i) + " is not simple");
    }
    denominator *= gap;
  }
  // Minor M_j keeps the two indices other than j.
  std::array<int, 2> keep{};
  int n = 0;
  for (int k = 0; k < 3; ++k) {
    if (k != j - 1) keep[static_cast<std::size_t>(n++)] = k;
  }
  const double tr = m(keep[0], keep[0]) + m(keep[1], keep[1]);
  const double det =
      m(keep[0], keep[0]) * m(keep[1], keep[1]) - m(keep[0], keep[1]) * m(keep[1], keep[0]);
  const double numerator = s * s - tr * s + det;
  return std::clamp(numerator / denominator, 0.0, 1.0);
}

EulerAngles euler_angles(const Mat3& r) {
  EulerAngles a;
  const double sin_theta = std::hypot(r(2, 0), r(2, 1));
  a.theta = std::atan2(sin_theta, r(2, 2));
  if (sin_theta < 1e-10) {
    a.gimbal_lock = true;
    a.phi = 0.0;
    a.psi = r(2, 2) > 0.0 ? std::atan2(r(0, 1), r(0, 0)) : std::atan2(r(0, 1), -r(0, 0));
    return a;
  }
  a.psi = std::atan2(-r(1, 2), r(0, 2));
  a.phi = std::atan2(-r(2, 1), -r(2, 0));
  return a;
}

Mat3 euler_rotation(double psi, double theta, double phi) {
  const double cps = std::cos(psi), sps = std::sin(psi);
  const double cth = std::cos(theta), sth = std::sin(theta);
  const double cph = std::cos(phi), sph = std::sin(phi);
  Mat3 r;
  r << cps * cth * cph - sps * sph, cps * cth * sph + sps * cph, cps * sth,
      -sps * cth * cph - cps * sph, -sps * cth * sph + cps * cph, -sps * sth,
      -sth * cph, -sth * sph, cth;
  return r;
}

Mat3 euler_rotation(const EulerAngles& a) { return euler_rotation(a.psi, a.theta, a.phi); }

NormalModeData normal_modes(const CouplingMatrix& m) {
  NormalModeData data;
  data.sigma2 = normal_frequencies(m);
  data.rotation = rotation_matrix(m, data.sigma2);
  data.angles = euler_angles(data.rotation);
  return data;
}

}  // namespace triosc
