#include "triosc/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "triosc/errors.hpp"

namespace triosc {

namespace {

constexpr double kPurityTol = 1e-6;

int index(Mode m) { return static_cast<int>(m); }

}  // namespace

SBlock s_block(const ErmakovMode& mode) {
  if (!(mode.omega_eff > 0.0) || !(mode.rho > 0.0)) {
    throw NonpositiveFrequency("effective frequency must be > 0");
  }
  const double w = mode.omega_eff;
  const double k = mode.rhodot / mode.rho;
  return {w + k * k / w, 1.0 / w, k / w};
}

std::array<SBlock, 3> s_blocks(const std::array<ErmakovMode, 3>& modes) {
  return {s_block(modes[0]), s_block(modes[1]), s_block(modes[2])};
}

Mat6 block_diagonal(const std::array<SBlock, 3>& blocks) {
  Mat6 s = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    s(2 * i, 2 * i) = blocks[i].a;
    s(2 * i, 2 * i + 1) = blocks[i].c;
    s(2 * i + 1, 2 * i) = blocks[i].c;
    s(2 * i + 1, 2 * i + 1) = blocks[i].b;
  }
  return s;
}

Mat6 blocked_rotation(const Mat3& r) {
  Mat6 out = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out(2 * i, 2 * j) = r(i, j);
      out(2 * i + 1, 2 * j + 1) = r(i, j);
    }
  }
  return out;
}

MatX symplectic_form(int modes) {
  MatX w = MatX::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    w(2 * i, 2 * i + 1) = 1.0;
    w(2 * i + 1, 2 * i) = -1.0;
  }
  return w;
}

Mat6 gaussian_matrix(const Mat3& r, const std::array<SBlock, 3>& blocks) {
  const Mat6 rt = blocked_rotation(r);
  Mat6 g = rt.transpose() * block_diagonal(blocks) * rt;
  return 0.5 * (g + g.transpose());
}

Mat6 covariance(const Mat6& g) {
  const double det = g.determinant();
  if (!(std::abs(det - 1.0) <= kPurityTol)) {
    throw NotPure("det G = " + std::to_string(det) + " differs from 1");
  }
  // Omega^-1 = Omega^T, and conjugating by Omega only permutes entries and
  // flips signs, so do it exactly.
  Mat6 s;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const int pi = i ^ 1;
      const int pj = j ^ 1;
      const double sign = ((i & 1) == (j & 1)) ? 1.0 : -1.0;
      s(i, j) = sign * g(pi, pj);
    }
  }
  return s;
}

Mat6 covariance_from_blocks(const Mat3& r, const std::array<SBlock, 3>& blocks) {
  std::array<SBlock, 3> inv;
  for (int i = 0; i < 3; ++i) inv[i] = {blocks[i].b, blocks[i].a, -blocks[i].c};
  return gaussian_matrix(r, inv);
}

GaussianState::GaussianState(const Mat6& g) : g_(g), cov_(covariance(g)) {}

GaussianState::GaussianState(const Mat3& r, const std::array<SBlock, 3>& blocks)
    : GaussianState(gaussian_matrix(r, blocks)) {}

Mat2 GaussianState::mode_cov(Mode m) const {
  const int k = 2 * index(m);
  return cov_.block<2, 2>(k, k);
}

ReducedState reduce(const GaussianState& state, const std::vector<Mode>& modes) {
  if (modes.empty() || modes.size() >= 3) {
    throw InvalidArgument("reduction needs a nonempty proper subset of modes");
  }
  if (modes.size() == 2 && modes[0] == modes[1]) {
    throw InvalidArgument("repeated mode in reduction");
  }
  const auto n = static_cast<int>(modes.size());
  ReducedState out{modes, MatX(2 * n, 2 * n)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out.cov.block<2, 2>(2 * a, 2 * b) =
          state.cov().block<2, 2>(2 * index(modes[a]), 2 * index(modes[b]));
    }
  }
  return out;
}

std::vector<double> symplectic_eigenvalues(const MatX& cov) {
  const auto n = cov.rows();
  if (n != cov.cols() || (n != 2 && n != 4 && n != 6)) {
    throw InvalidArgument("covariance must be 2x2, 4x4 or 6x6");
  }
  if (n == 2) {
    const double det = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
    if (!(cov(0, 0) > 0.0) || !(det > 0.0)) {
      throw NotPositiveDefinite("single-mode covariance is not positive definite");
    }
    return {std::sqrt(det)};
  }
  // With sigma = L L^T, the spectrum of i Omega sigma equals that of the
  // Hermitian i L^T Omega L, i.e. +-nu. (L^T Omega L) is real antisymmetric,
  // so nu^2 are the (doubly degenerate) eigenvalues of -(L^T Omega L)^2.
  const Eigen::LLT<MatX> llt(0.5 * (cov + cov.transpose()));
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("covariance is not positive definite");
  }
  const MatX l = llt.matrixL();
  const MatX a = l.transpose() * symplectic_form(static_cast<int>(n / 2)) * l;
  const MatX m = a.transpose() * a;
  const Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (m + m.transpose()),
                                               Eigen::EigenvaluesOnly);
  std::vector<double> nu;
  // Eigenvalues come ascending in pairs; average each pair.
  for (Eigen::Index i = n - 1; i > 0; i -= 2) {
    const double v = 0.5 * (es.eigenvalues()(i) + es.eigenvalues()(i - 1));
    nu.push_back(std::sqrt(std::max(v, 0.0)));
  }
  return nu;
}

PhysicalityReport physicality(const MatX& cov) {
  const auto n = cov.rows();
  if (n != cov.cols() || n % 2 != 0 || n == 0) {
    throw InvalidArgument("covariance must be square with even size");
  }
  const CMatX h = cov.cast<std::complex<double>>() +
                  std::complex<double>(0.0, 1.0) *
                      symplectic_form(static_cast<int>(n / 2)).cast<std::complex<double>>();
  const Eigen::SelfAdjointEigenSolver<CMatX> es(h, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  return {lo, lo >= -1e-9};
}

CMatX to_ladder_basis(const MatX& cov) {
  const auto n = cov.rows();
  if (n != cov.cols() || n % 2 != 0) {
    throw InvalidArgument("covariance must be square with even size");
  }
  using cd = std::complex<double>;
  CMatX k = CMatX::Zero(n, n);
  for (Eigen::Index i = 0; i < n; i += 2) {
    k(i, i) = 1.0;
    k(i, i + 1) = 1.0;
    k(i + 1, i) = cd(0.0, -1.0);
    k(i + 1, i + 1) = cd(0.0, 1.0);
  }
  return k * cov.cast<cd>() * k.adjoint();
}

PptResult ppt_test(const GaussianState& state, Mode single) {
  MatX pt = state.cov();
  const int p = 2 * index(single) + 1;
  pt.row(p) *= -1.0;
  pt.col(p) *= -1.0;
  const std::vector<double> nu = symplectic_eigenvalues(pt);
  const double lo = nu.back();
  return {lo, lo >= 1.0 - 1e-9};
}

}  // namespace triosc
