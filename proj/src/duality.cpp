#include "cavityfield/duality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cavityfield {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

DualityAngle::DualityAngle(double radians) : theta_(radians) {
  if (!std::isfinite(radians))
    throw std::invalid_argument("duality angle must be finite");
  if (theta_ < 0.0 || theta_ >= kTwoPi) {
    theta_ = std::fmod(theta_, kTwoPi);
    if (theta_ < 0.0) theta_ += kTwoPi;
    if (theta_ >= kTwoPi) theta_ = 0.0;  // fmod roundoff can land on 2*pi
  }
}

// Quarter turns get exact coefficients; std::cos(pi/2) is ~6e-17, not 0,
// and the theta = pi/2 swap is specified to be exact.
double DualityAngle::cosine() const {
  if (theta_ == 0.0) return 1.0;
  if (theta_ == kHalfPi) return 0.0;
  if (theta_ == std::numbers::pi) return -1.0;
  if (theta_ == 3.0 * kHalfPi) return 0.0;
  return std::cos(theta_);
}

double DualityAngle::sine() const {
  if (theta_ == 0.0) return 0.0;
  if (theta_ == kHalfPi) return 1.0;
  if (theta_ == std::numbers::pi) return 0.0;
  if (theta_ == 3.0 * kHalfPi) return -1.0;
  return std::sin(theta_);
}

FieldSnapshot duality_rotate(const FieldSnapshot& snap, DualityAngle theta,
                             const CavityConfig& cfg) {
  snap.validate();
  cfg.validate();
  const double ce = theta.cosine();
  const double se = theta.sine();
  const double se_scale = std::sqrt(cfg.mu0 / cfg.epsilon0);  // H~ -> E units
  FieldSnapshot out = snap;
  for (std::size_t i = 0; i < snap.E_x.size(); ++i) {
    const Complex e = snap.E_x[i];
    const Complex h = snap.H_y[i];
    // Rotation of (sqrt(eps0) E, sqrt(mu0) H), written back in field units.
    out.E_x[i] = e * ce + h * se * se_scale;
    out.H_y[i] = h * ce - e * se / se_scale;
  }
  return out;
}

InvarianceReport invariance_report(const SnapshotFn& source, DualityAngle theta,
                                   const CavityConfig& cfg, double t, double dt) {
  const SnapshotFn rotated = [&source, theta, &cfg](double time) {
    return duality_rotate(source(time), theta, cfg);
  };
  InvarianceReport report;
  report.energy_before = field_energy(source(t), cfg);
  report.energy_after = field_energy(rotated(t), cfg);
  report.residuals_before = maxwell_residuals(source, cfg, t, dt);
  report.residuals_after = maxwell_residuals(rotated, cfg, t, dt);
  return report;
}

}  // namespace cavityfield
