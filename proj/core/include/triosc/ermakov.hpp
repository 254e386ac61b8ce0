#pragma once

#include <vector>

namespace triosc {

/// Scale factor rho(t) of one normal mode and its time derivative.
struct ScaleFactor {
  double rho = 1.0;
  double rhodot = 0.0;
};

/// Closed-form solution of rho'' + eps^2 sigma0^2 rho = sigma0^2 / rho^3
/// with rho(0) = 1, rho'(0) = 0:
///   rho = sqrt((eps^2 - 1) cos(2 eps sigma0 t) + eps^2 + 1) / (sqrt2 eps)
/// Throws NonpositiveFrequency for sigma0 <= 0.
ScaleFactor rho(double sigma0, double epsilon, double t);

/// Effective frequency sigma0 / rho^2.
double omega_eff(double sigma0, double epsilon, double t);

/// A normal mode evaluated at one instant.
struct ErmakovMode {
  double sigma0 = 1.0;
  double epsilon = 1.0;
  double t = 0.0;
  double rho = 1.0;
  double rhodot = 0.0;
  double omega_eff = 1.0;

  static ErmakovMode at(double sigma0, double epsilon, double t);

  /// rho'^2 + eps^2 sigma0^2 rho^2 + sigma0^2 / rho^2, conserved for t > 0.
  double first_integral() const;
};

struct ErmakovSample {
  double t = 0.0;
  double rho = 1.0;
  double rhodot = 0.0;
};

/// Classic RK4 integration of the post-quench Ermakov equation from (1, 0).
///
/// The step is shrunk to t_end / ceil(t_end / dt) so the last sample lands
/// on t_end; every step is returned, starting with t = 0. Throws
/// StepTooLarge if dt * eps * sigma0 > 0.1.
std::vector<ErmakovSample> integrate_ermakov(double sigma0, double epsilon, double t_end,
                                             double dt);

}  // namespace triosc
