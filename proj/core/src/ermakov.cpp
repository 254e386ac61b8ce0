#include "triosc/ermakov.hpp"

#include <cmath>
#include <numbers>

#include "triosc/errors.hpp"

namespace triosc {

namespace {

void validate(double sigma0, double epsilon) {
  if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
    throw NonpositiveFrequency("normal frequency must be > 0 (zero modes have no Ermakov scale)");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("quench factor must be finite and > 0");
  }
}

}  // namespace

ScaleFactor rho(double sigma0, double epsilon, double t) {
  validate(sigma0, epsilon);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("time must be finite and >= 0");
  if (t == 0.0) return {1.0, 0.0};

  const double e2 = epsilon * epsilon;
  const double phase = 2.0 * epsilon * sigma0 * t;
  const double u = (e2 - 1.0) * std::cos(phase) + e2 + 1.0;
  ScaleFactor s;
  s.rho = std::sqrt(u) / (std::numbers::sqrt2 * epsilon);
  s.rhodot = -(e2 - 1.0) * sigma0 * std::sin(phase) / (2.0 * epsilon * s.rho);
  return s;
}

double omega_eff(double sigma0, double epsilon, double t) {
  const ScaleFactor s = rho(sigma0, epsilon, t);
  return sigma0 / (s.rho * s.rho);
}

ErmakovMode ErmakovMode::at(double sigma0, double epsilon, double t) {
  const ScaleFactor s = triosc::rho(sigma0, epsilon, t);
  ErmakovMode m;
  m.sigma0 = sigma0;
  m.epsilon = epsilon;
  m.t = t;
  m.rho = s.rho;
  m.rhodot = s.rhodot;
  m.omega_eff = sigma0 / (s.rho * s.rho);
  return m;
}

double ErmakovMode::first_integral() const {
  const double w = epsilon * sigma0;
  return rhodot * rhodot + w * w * rho * rho + sigma0 * sigma0 / (rho * rho);
}

std::vector<ErmakovSample> integrate_ermakov(double sigma0, double epsilon, double t_end,
                                             double dt) {
  validate(sigma0, epsilon);
  if (!(dt > 0.0) || !(t_end > 0.0)) throw InvalidArgument("dt and t_end must be > 0");
  if (dt * epsilon * sigma0 > 0.1) {
    throw StepTooLarge("dt * eps * sigma0 must not exceed 0.1");
  }
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  const double h = t_end / static_cast<double>(steps);
  const double w2 = epsilon * epsilon * sigma0 * sigma0;
  const double s2 = sigma0 * sigma0;
  auto accel = [&](double r) { return s2 / (r * r * r) - w2 * r; };

  std::vector<ErmakovSample> out;
  out.reserve(steps + 1);
  double r = 1.0;
  double v = 0.0;
  out.push_back({0.0, r, v});
  for (std::size_t n = 0; n < steps; ++n) {
    const double k1r = v;
    const double k1v = accel(r);
    const double k2r = v + 0.5 * h * k1v;
    const double k2v = accel(r + 0.5 * h * k1r);
    const double k3r = v + 0.5 * h * k2v;
    const double k3v = accel(r + 0.5 * h * k2r);
    const double k4r = v + h * k3v;
    const double k4v = accel(r + h * k3r);
    r += h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    out.push_back({static_cast<double>(n + 1) * h, r, v});
  }
  return out;
}

}  // namespace triosc
