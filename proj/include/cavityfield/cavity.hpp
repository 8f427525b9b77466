#ifndef CAVITYFIELD_CAVITY_HPP
#define CAVITYFIELD_CAVITY_HPP

#include <complex>
#include <vector>

namespace cavityfield {

using Complex = std::complex<double>;

enum class UnitSystem { SI, Natural };

/// Label of a standing-wave mode, alpha = 1, 2, 3, ...
struct ModeIndex {
  explicit ModeIndex(int alpha);
  int value;
};

/// Cavity geometry and material constants. The speed of light is always
/// derived from mu0*epsilon0; it is never stored, so it cannot drift out
/// of sync with the constants.
struct CavityConfig {
  double L = 1.0;         // cavity length along z (m)
  double V = 1.0;         // cavity volume (m^3); cross-section V/L
  double epsilon0 = 1.0;  // permittivity (F/m)
  double mu0 = 1.0;       // permeability (H/m)
  double hbar = 1.0;      // reduced Planck constant (J*s)
  double default_mass = 1.0;
  std::vector<double> mode_masses;  // optional per-mode override, [0] -> alpha=1
  UnitSystem units = UnitSystem::Natural;

  double c() const;
  double mass(ModeIndex alpha) const;
  void validate() const;  // throws std::invalid_argument on a bad field
};

/// Uniform grid on [0, z_max] including both endpoints. Samples are
/// generated as z_max*i/(n-1), so the spacing is uniform to roundoff.
class ZGrid {
 public:
  static ZGrid uniform(int n_points, double z_max);

  int size() const { return n_points_; }
  double z_max() const { return z_max_; }
  double spacing() const { return z_max_ / (n_points_ - 1); }
  double z(int i) const { return z_max_ * static_cast<double>(i) / (n_points_ - 1); }
  std::vector<double> values() const;

 private:
  ZGrid(int n_points, double z_max) : n_points_(n_points), z_max_(z_max) {}
  int n_points_;
  double z_max_;
};

/// Wavenumber, angular frequency and field normalization of one mode:
/// k = alpha*pi/L, nu = k*c, A = sqrt(2*nu^2*m/(V*epsilon0)).
struct ModeConstants {
  double k;   // rad/m
  double nu;  // rad/s
  double A;   // field normalization
};

ModeConstants mode_constants(const CavityConfig& cfg, ModeIndex alpha);

// Spatial profiles sin(k z) and cos(k z) of the electric / magnetic mode
// functions. Grid variants reject grids that extend past the cavity.
double electric_profile(const CavityConfig& cfg, ModeIndex alpha, double z);
double magnetic_profile(const CavityConfig& cfg, ModeIndex alpha, double z);
std::vector<double> electric_profile(const CavityConfig& cfg, ModeIndex alpha,
                                     const ZGrid& grid);
std::vector<double> magnetic_profile(const CavityConfig& cfg, ModeIndex alpha,
                                     const ZGrid& grid);

}  // namespace cavityfield

#endif
