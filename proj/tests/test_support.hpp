#pragma once

#include <cmath>
#include <random>

#include "triosc/model.hpp"

namespace triosc::testing {

/// Closed Hooke chain: omega^2 = 2C under the +C convention.
inline QuenchSpec hooke(double c, double eps) {
  const double w = std::sqrt(2.0 * c);
  return QuenchSpec({w, w, w}, {c, c, c}, eps, CouplingSign::paper_symmetric);
}

/// omega1 = omega3 = w, omega2 = wt, C12 = C23 = c, C13 = ct.
inline QuenchSpec bisymmetric(double w, double wt, double c, double ct, double eps) {
  return QuenchSpec({w, wt, w}, {c, ct, c}, eps);
}

inline QuenchSpec asymmetric(double eps) {
  return QuenchSpec({3.0, 5.0, 2.5}, {1.5, 2.0, 1.0}, eps);
}

/// Random symmetric matrix with entries uniform in [-10, 10].
inline Mat3 random_symmetric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = u(rng);
  }
  return m;
}

}  // namespace triosc::testing
