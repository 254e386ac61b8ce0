#pragma once

#include <array>
#include <vector>

#include "triosc/ermakov.hpp"
#include "triosc/linalg.hpp"

namespace triosc {

// All phase-space matrices use the quadrature ordering (x1, p1, x2, p2, x3, p3).
// The covariance is normalized so that a pure global state has det sigma = 1
// and the vacuum of a unit-frequency oscillator has sigma = I.

/// 2x2 block [[a, c], [c, b]] of one normal mode in the Wigner exponent.
struct SBlock {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
};

/// A = W + (rho'/rho)^2 / W, B = 1 / W, C = (rho'/rho) / W with W = sigma0 / rho^2.
SBlock s_block(const ErmakovMode& mode);
std::array<SBlock, 3> s_blocks(const std::array<ErmakovMode, 3>& modes);

/// Block-diagonal S = (+) [[a_i, c_i], [c_i, b_i]].
Mat6 block_diagonal(const std::array<SBlock, 3>& blocks);

/// R (x) I2, pairing each R_ij with both the x and p rows.
Mat6 blocked_rotation(const Mat3& r);

/// Symplectic form (+) [[0, 1], [-1, 0]] of n modes.
MatX symplectic_form(int modes);

/// G = R~^T S R~.
Mat6 gaussian_matrix(const Mat3& r, const std::array<SBlock, 3>& blocks);

/// sigma = Omega^-1 G Omega. Throws NotPure if |det G - 1| > 1e-6.
Mat6 covariance(const Mat6& g);

/// Same covariance built as R~^T S^-1 R~, S^-1 blocks [[b, -c], [-c, a]].
Mat6 covariance_from_blocks(const Mat3& r, const std::array<SBlock, 3>& blocks);

enum class Mode { A = 0, B = 1, C = 2 };

/// Pure three-mode Gaussian state: Wigner matrix and covariance.
class GaussianState {
 public:
  /// Throws NotPure if |det G - 1| > 1e-6.
  explicit GaussianState(const Mat6& g);
  GaussianState(const Mat3& r, const std::array<SBlock, 3>& blocks);

  const Mat6& g() const noexcept { return g_; }
  const Mat6& cov() const noexcept { return cov_; }

  /// Single-mode 2x2 block of the covariance.
  Mat2 mode_cov(Mode m) const;

 private:
  Mat6 g_;
  Mat6 cov_;
};

struct ReducedState {
  std::vector<Mode> modes;
  MatX cov;
};

/// Keeps the rows and columns of `modes` in the given order. Throws
/// InvalidArgument for an empty, full, or repeated selection.
ReducedState reduce(const GaussianState& state, const std::vector<Mode>& modes);

/// Symplectic eigenvalues of a 2n x 2n covariance (n = 1, 2, 3), descending.
/// Throws NotPositiveDefinite.
std::vector<double> symplectic_eigenvalues(const MatX& cov);

struct PhysicalityReport {
  double min_eigenvalue = 0.0;
  bool ok = false;
};

/// Smallest eigenvalue of the Hermitian sigma + i Omega; ok iff >= -1e-9.
PhysicalityReport physicality(const MatX& cov);

/// K sigma K^dagger with K = (+) [[1, 1], [-i, i]].
CMatX to_ladder_basis(const MatX& cov);

struct PptResult {
  double nu_tilde_min = 0.0;
  bool separable = false;
};

/// Partial transposition of `single` against the other two modes: the sign of
/// its momentum is flipped and the smallest symplectic eigenvalue returned.
PptResult ppt_test(const GaussianState& state, Mode single);

}  // namespace triosc
