#include "triosc/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "triosc/errors.hpp"

namespace triosc {

namespace {

int pair_index(int i, int j) {
  if (i == 1 && j == 2) return 0;
  if (i == 1 && j == 3) return 1;
  if (i == 2 && j == 3) return 2;
  throw InvalidArgument("coupling pair must be (1,2), (1,3) or (2,3); got (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidArgument("time must be finite and >= 0");
  }
}

}  // namespace

QuenchSpec::QuenchSpec(std::array<double, 3> omega0, std::array<double, 3> c0,
                       double epsilon, CouplingSign sign)
    : omega0_(omega0), c0_(c0), epsilon_(epsilon), sign_(sign) {
  for (double w : omega0_) {
    if (!std::isfinite(w)) throw InvalidArgument("base frequencies must be finite");
  }
  for (double c : c0_) {
    if (!std::isfinite(c)) throw InvalidArgument("base couplings must be finite");
  }
  // H(eps) = H(-eps), so only the positive branch is represented.
  if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_)) {
    throw InvalidArgument("quench factor must be finite and > 0");
  }
}

QuenchSpec QuenchSpec::with_epsilon(double epsilon) const {
  return QuenchSpec(omega0_, c0_, epsilon, sign_);
}

double quenched_frequency(const QuenchSpec& spec, int i, double t) {
  if (i < 1 || i > 3) {
    throw InvalidArgument("mode index must be in 1..3; got " + std::to_string(i));
  }
  require_time(t);
  const double w = spec.omega0()[static_cast<std::size_t>(i - 1)];
  return t == 0.0 ? w : spec.epsilon() * w;
}

double quenched_coupling(const QuenchSpec& spec, int i, int j, double t) {
  const int k = pair_index(i, j);
  require_time(t);
  const double c = spec.c0()[static_cast<std::size_t>(k)];
  const double eps = spec.epsilon();
  return t == 0.0 ? c : eps * eps * c;
}

CouplingMatrix::CouplingMatrix(const Mat3& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (int r = 0; r < 3; ++r) {
    for (int c = r + 1; c < 3; ++c) {
      if (std::abs(m(r, c) - m(c, r)) > 1e-12 * scale) {
        throw InvalidArgument("coupling matrix must be symmetric");
      }
    }
  }
  m_ = m;
  for (int r = 0; r < 3; ++r) {
    for (int c = r + 1; c < 3; ++c) m_(c, r) = m_(r, c);
  }
}

CouplingMatrix coupling_matrix(const QuenchSpec& spec, double t) {
  require_time(t);
  const double off_sign = spec.coupling_sign() == CouplingSign::paper_general ? -1.0 : 1.0;
  Mat3 m = Mat3::Zero();
  for (int i = 1; i <= 3; ++i) {
    const double w = quenched_frequency(spec, i, t);
    m(i - 1, i - 1) = w * w;
  }
  const std::array<std::array<int, 2>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (auto [i, j] : pairs) {
    const double c = off_sign * quenched_coupling(spec, i, j, t);
    m(i - 1, j - 1) = c;
    m(j - 1, i - 1) = c;
  }
  return CouplingMatrix(m);
}

PositivityReport sylvester_positivity(const CouplingMatrix& cm) {
  const Mat3& m = cm.matrix();
  PositivityReport report;
  report.minors[0] = m(0, 0);
  report.minors[1] = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  report.minors[2] = m.determinant();
  // A minor at rounding level of |m|^k is a zero mode, not a positive one.
  const double scale = std::max(cm.norm(), std::numeric_limits<double>::min());
  report.positive = report.minors[0] > 1e-12 * scale &&
                    report.minors[1] > 1e-12 * scale * scale &&
                    report.minors[2] > 1e-12 * scale * scale * scale;
  return report;
}

}  // namespace triosc
