#ifndef CAVITYFIELD_DUALITY_HPP
#define CAVITYFIELD_DUALITY_HPP

#include "cavityfield/classical.hpp"

namespace cavityfield {

/// Rotation angle of the chiral E/H mixing, canonicalized to [0, 2*pi).
/// cosine()/sine() return exact values at the quarter turns so that the
/// theta = pi/2 field swap is bit-exact.
class DualityAngle {
 public:
  explicit DualityAngle(double radians);
  double radians() const { return theta_; }
  double cosine() const;
  double sine() const;

 private:
  double theta_;
};

/// One-parameter rotation mixing the fields. In SI units E and H carry
/// different dimensions, so the rotation acts on the normalized pair
/// (sqrt(eps0) E, sqrt(mu0) H) and is mapped back afterwards; in natural
/// units this is the bare rotation
///   E -> E cos(theta) + H sin(theta),  H -> H cos(theta) - E sin(theta).
FieldSnapshot duality_rotate(const FieldSnapshot& snap, DualityAngle theta,
                             const CavityConfig& cfg);

/// Energy and residual diagnostics before and after rotating a snapshot
/// source by theta.
struct InvarianceReport {
  double energy_before = 0.0;
  double energy_after = 0.0;
  ResidualReport residuals_before;
  ResidualReport residuals_after;
};

InvarianceReport invariance_report(const SnapshotFn& source, DualityAngle theta,
                                   const CavityConfig& cfg, double t, double dt);

}  // namespace cavityfield

#endif
