#pragma once

#include <array>

#include "triosc/linalg.hpp"

namespace triosc {

/// Sign placed on the off-diagonal couplings of the coupling matrix.
///
/// `paper_general` stores -C_ij (the Hamiltonian's -C_ij x_i x_j terms);
/// `paper_symmetric` stores +C_ij, the reading under which the fully
/// symmetric chain has normal frequencies w^2 + 2C and w^2 - C.
enum class CouplingSign { paper_general, paper_symmetric };

/// Base parameters of three unit-mass oscillators plus the quench factor.
///
/// Couplings are ordered (C12, C13, C23). For t = 0 the base values apply;
/// for every t > 0 frequencies are scaled by epsilon and couplings by
/// epsilon^2.
class QuenchSpec {
 public:
  QuenchSpec(std::array<double, 3> omega0, std::array<double, 3> c0,
             double epsilon,
             CouplingSign sign = CouplingSign::paper_general);

  const std::array<double, 3>& omega0() const noexcept { return omega0_; }
  const std::array<double, 3>& c0() const noexcept { return c0_; }
  double epsilon() const noexcept { return epsilon_; }
  CouplingSign coupling_sign() const noexcept { return sign_; }

  /// Same oscillators, different quench factor.
  QuenchSpec with_epsilon(double epsilon) const;

  bool operator==(const QuenchSpec&) const = default;

 private:
  std::array<double, 3> omega0_;
  std::array<double, 3> c0_;
  double epsilon_;
  CouplingSign sign_;
};

/// omega_i(t) for mode i in 1..3.
double quenched_frequency(const QuenchSpec& spec, int i, double t);

/// C_ij(t) for 1 <= i < j <= 3.
double quenched_coupling(const QuenchSpec& spec, int i, int j, double t);

/// Real symmetric 3x3 matrix diag(omega^2) -/+ C_ij.
class CouplingMatrix {
 public:
  /// Throws InvalidArgument unless `m` is symmetric to 1e-12 relative.
  /// The stored matrix is made exactly symmetric from the upper triangle.
  explicit CouplingMatrix(const Mat3& m);

  const Mat3& matrix() const noexcept { return m_; }
  double operator()(int row, int col) const { return m_(row, col); }

  /// Frobenius norm, used as the scale for relative tolerances.
  double norm() const { return m_.norm(); }

 private:
  Mat3 m_;
};

CouplingMatrix coupling_matrix(const QuenchSpec& spec, double t);

struct PositivityReport {
  std::array<double, 3> minors{};
  bool positive = false;
};

/// Leading principal minors; positive iff each k-th minor exceeds
/// 1e-12 |m|^k, so rounding-level zero modes are not counted as positive.
PositivityReport sylvester_positivity(const CouplingMatrix& m);

}  // namespace triosc
