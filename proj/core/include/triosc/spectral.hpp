#pragma once

#include <array>

#include "triosc/linalg.hpp"
#include "triosc/model.hpp"

namespace triosc {

/// Coefficients of the characteristic cubic of a coupling matrix.
///
/// b2 = trace, b1 = sum of principal 2x2 minors, b0 = -det. p and q are
/// evaluated from the deviatoric part B = m - (b2/3) I as p = (3/2) tr(B^2)
/// and q = (27/2) det B, which equal b2^2 - 3 b1 and
/// b2^3 - (9/2) b1 b2 - (27/2) b0 without the cancellation.
/// phi = atan2(sqrt(max(p^3 - q^2, 0)), q) / 3, so phi is in [0, pi/3].
struct CubicCoefficients {
  double b0 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double p = 0.0;
  double q = 0.0;
  double phi = 0.0;
};

/// Throws DiscriminantNegative if p^3 - q^2 < -1e-9 max(1, q^2).
CubicCoefficients characteristic_coefficients(const CouplingMatrix& m);

/// Eigenvalues sigma_i^2 in branch order:
///   sigma_1^2 = (b2 + 2 sqrt(p) cos(phi)) / 3
///   sigma_2^2 = (b2 + 2 sqrt(p) cos(phi + 2pi/3)) / 3
///   sigma_3^2 = (b2 + 2 sqrt(p) cos(phi - 2pi/3)) / 3
/// so that sigma_1^2 >= sigma_3^2 >= sigma_2^2.
std::array<double, 3> normal_frequencies(const CouplingMatrix& m);

/// Cyclic Jacobi eigen-decomposition of a symmetric 3x3 matrix.
/// Eigenvectors are the columns of `vectors`, matching `values`.
struct JacobiResult {
  Vec3 values;
  Mat3 vectors;
  int sweeps = 0;
};

JacobiResult jacobi_eigen(const Mat3& m);

/// Signed rotation whose rows are unit eigenvectors of m in the branch order
/// of `sigma2`, with det R = +1 and the first nonzero entry of rows 1 and 3
/// positive. Inside a degenerate eigenspace the basis is fixed
/// deterministically; an exactly fully symmetric input gets the
/// (1,1,1)/sqrt3, (0,1,-1)/sqrt2, (2,-1,-1)/sqrt6 basis.
Mat3 rotation_matrix(const CouplingMatrix& m, const std::array<double, 3>& sigma2);

/// R_ij^2 from the eigenvalue-eigenvector identity, with i, j in 1..3:
///   prod_k (sigma_i^2 - lambda_k(M_j)) / prod_{k != i} (sigma_i^2 - sigma_k^2)
/// where M_j deletes row and column j. Clamped to [0, 1]. Throws
/// DegenerateSpectrum if sigma_i^2 is within 1e-8 |m| of another eigenvalue.
double squared_rotation_identity(const CouplingMatrix& m, const std::array<double, 3>& sigma2,
                                 int i, int j);

struct EulerAngles {
  double psi = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  /// sin(theta) < 1e-10: phi is set to 0 and psi carries the z rotation.
  bool gimbal_lock = false;
};

/// Angles of R = R1(psi) R2(theta) R3(phi) with theta in [0, pi].
EulerAngles euler_angles(const Mat3& r);

/// The explicit rotation built from the three angles.
Mat3 euler_rotation(double psi, double theta, double phi);
Mat3 euler_rotation(const EulerAngles& a);

struct NormalModeData {
  std::array<double, 3> sigma2{};
  Mat3 rotation;
  EulerAngles angles;
};

NormalModeData normal_modes(const CouplingMatrix& m);

}  // namespace triosc
