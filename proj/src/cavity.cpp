#include "cavityfield/cavity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cavityfield {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ModeIndex::ModeIndex(int alpha) : value(alpha) {
  require(alpha >= 1, "mode index alpha must be >= 1, got " + std::to_string(alpha));
}

double CavityConfig::c() const { return 1.0 / std::sqrt(mu0 * epsilon0); }

double CavityConfig::mass(ModeIndex alpha) const {
  if (mode_masses.empty()) return default_mass;
  const auto i = static_cast<std::size_t>(alpha.value - 1);
  require(i < mode_masses.size(),
          "no mass entry for mode alpha=" + std::to_string(alpha.value) +
              " (mass array has " + std::to_string(mode_masses.size()) + " entries)");
  return mode_masses[i];
}

void CavityConfig::validate() const {
  require(L > 0.0, "L must be > 0");
  require(V > 0.0, "V must be > 0");
  require(epsilon0 > 0.0, "epsilon0 must be > 0");
  require(mu0 > 0.0, "mu0 must be > 0");
  require(hbar > 0.0, "hbar must be > 0");
  require(default_mass > 0.0, "mass must be > 0");
  for (std::size_t i = 0; i < mode_masses.size(); ++i)
    require(mode_masses[i] > 0.0, "mass[" + std::to_string(i) + "] must be > 0");
  if (units == UnitSystem::Natural) {
    require(epsilon0 == 1.0 && mu0 == 1.0 && hbar == 1.0,
            "natural units require epsilon0 = mu0 = hbar = 1 exactly");
  }
}

ZGrid ZGrid::uniform(int n_points, double z_max) {
  if (n_points < 3)
    throw std::invalid_argument("grid needs at least 3 points, got " +
                                std::to_string(n_points));
  if (!(z_max > 0.0)) throw std::invalid_argument("grid extent must be > 0");
  return ZGrid(n_points, z_max);
}

std::vector<double> ZGrid::values() const {
  std::vector<double> zs(static_cast<std::size_t>(n_points_));
  for (int i = 0; i < n_points_; ++i) zs[static_cast<std::size_t>(i)] = z(i);
  return zs;
}

ModeConstants mode_constants(const CavityConfig& cfg, ModeIndex alpha) {
  cfg.validate();
  const double k = alpha.value * std::numbers::pi / cfg.L;
  const double nu = k * cfg.c();
  const double A = std::sqrt(2.0 * nu * nu * cfg.mass(alpha) / (cfg.V * cfg.epsilon0));
  return {k, nu, A};
}

namespace {

// Grids may stop short of L but never extend past the cavity; the bound is
// slack by a few ulp so that z_max = L computed elsewhere is accepted.
void check_grid_inside(const CavityConfig& cfg, const ZGrid& grid) {
  if (grid.z_max() > cfg.L * (1.0 + 1e-12))
    throw std::invalid_argument("grid extends past the cavity: z_max > L");
}

}  // namespace

double electric_profile(const CavityConfig& cfg, ModeIndex alpha, double z) {
  if (z < 0.0 || z > cfg.L * (1.0 + 1e-12))
    throw std::invalid_argument("z outside the cavity [0, L]");
  return std::sin(mode_constants(cfg, alpha).k * z);
}

double magnetic_profile(const CavityConfig& cfg, ModeIndex alpha, double z) {
  if (z < 0.0 || z > cfg.L * (1.0 + 1e-12))
    throw std::invalid_argument("z outside the cavity [0, L]");
  return std::cos(mode_constants(cfg, alpha).k * z);
}

std::vector<double> electric_profile(const CavityConfig& cfg, ModeIndex alpha,
                                     const ZGrid& grid) {
  check_grid_inside(cfg, grid);
  const double k = mode_constants(cfg, alpha).k;
  std::vector<double> out(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i)
    out[static_cast<std::size_t>(i)] = std::sin(k * grid.z(i));
  return out;
}

std::vector<double> magnetic_profile(const CavityConfig& cfg, ModeIndex alpha,
                                     const ZGrid& grid) {
  check_grid_inside(cfg, grid);
  const double k = mode_constants(cfg, alpha).k;
  std::vector<double> out(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i)
    out[static_cast<std::size_t>(i)] = std::cos(k * grid.z(i));
  return out;
}

}  // namespace cavityfield
