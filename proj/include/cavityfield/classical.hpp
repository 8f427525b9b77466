#ifndef CAVITYFIELD_CLASSICAL_HPP
#define CAVITYFIELD_CLASSICAL_HPP

#include <functional>
#include <span>
#include <vector>

#include "cavityfield/cavity.hpp"

namespace cavityfield {

/// Amplitude data of one mode: q(t) = C1*e^{i nu t} + C2*e^{-i nu t},
/// plus the integration constants of the antiderivative q'(t) and of the
/// free function f(t).
struct ModeState {
  ModeIndex alpha;
  Complex C1{0.0, 0.0};
  Complex C2{0.0, 0.0};
  Complex C_prime{0.0, 0.0};  // constant of q'(t) = int q dt + C_prime
  double C_const = 0.0;       // constant of f(t); also the identity shift of
                              // the combined magnetic operator

  /// True when C2 == conj(C1) exactly, i.e. q(t) is real-valued.
  bool physical_real() const;

  /// Real-valued mode: C2 is pinned to conj(C1).
  static ModeState physical(int alpha, Complex C1, Complex C_prime = {},
                            double C_const = 0.0);
};

/// E_x and H_y sampled on a grid at one instant.
struct FieldSnapshot {
  ZGrid grid;
  std::vector<Complex> E_x;  // V/m
  std::vector<Complex> H_y;  // A/m
  double t = 0.0;
  bool real_tagged = false;  // set when the synthesizing modes are real-valued

  void validate() const;
};

using SnapshotFn = std::function<FieldSnapshot(double)>;

/// L2 norms of the four first-order residual combinations, evaluated with
/// central differences on interior grid points. "standard" pairs the curl
/// and the time derivative with the usual signs; "dual" flips that sign.
struct ResidualReport {
  double ampere_standard = 0.0;  // || eps0 dE/dt - (curl H)_x ||
  double faraday_standard = 0.0; // || (curl E)_y + mu0 dH/dt ||
  double ampere_dual = 0.0;      // || eps0 dE/dt + (curl H)_x ||
  double faraday_dual = 0.0;     // || (curl E)_y - mu0 dH/dt ||
  double dz = 0.0;
  double dt = 0.0;
};

/// Mode amplitude and its closed-form relatives. nu must match the mode the
/// state describes; q_prime_of_t rejects nu == 0 (the antiderivative changes
/// functional form there).
Complex q_of_t(const ModeState& state, double nu, double t);
Complex q_dot_of_t(const ModeState& state, double nu, double t);
Complex q_prime_of_t(const ModeState& state, double nu, double t);

/// Free function f(t) evaluated at a reference plane z_ref. The integrand
/// keeps its cos(k z) factor, so the value is only meaningful at a fixed
/// plane; z_ref defaults to 0 where cos = 1.
Complex f_alpha(const ModeState& state, const CavityConfig& cfg, double t,
                double z_ref = 0.0);

/// First solution family: E_x = sum A q(t) sin(kz),
/// H_y = sum (eps0 A / k) dq/dt cos(kz). Ascending-alpha summation.
FieldSnapshot synthesize_first_solution(std::span<const ModeState> states,
                                        const CavityConfig& cfg,
                                        const ZGrid& grid, double t);

/// Second solution family: H_y = (1/mu0) sum k A cos(kz) q'(t),
/// E_x = sum A dq'/dt sin(kz) = sum A q(t) sin(kz).
FieldSnapshot synthesize_second_solution(std::span<const ModeState> states,
                                         const CavityConfig& cfg,
                                         const ZGrid& grid, double t);

/// Energy of the first family computed along both routes: the oscillator
/// mode sum (1/2) sum [m nu^2 q^2 + p^2/m] and the trapezoid volume
/// quadrature (V/L) * (1/2) int [eps0 E^2 + mu0 H^2] dz.
struct EnergyPair {
  double mode_sum;
  double volume_quadrature;
};
EnergyPair hamiltonian_h1(std::span<const ModeState> states,
                          const CavityConfig& cfg, const ZGrid& grid, double t);

/// Rescaled canonical pair of the second family:
/// q'' = nu q'(t), p'' = m nu dq'/dt = m nu q(t).
struct CanonicalPair {
  Complex q_double_prime;
  Complex p_double_prime;
};
CanonicalPair canonical_double_prime(const ModeState& state,
                                     const CavityConfig& cfg, double t);

/// Energy of the second family along both printed forms, which are equal
/// by the q'', p'' change of variables:
/// from_qprime    = (1/2) sum [m nu^4 q'^2 + m nu^2 (dq'/dt)^2]
/// from_canonical = (1/2) sum [m nu^2 q''^2 + p''^2 / m]
struct EnergyPair2 {
  double from_qprime;
  double from_canonical;
};
EnergyPair2 hamiltonian_h2(std::span<const ModeState> states,
                           const CavityConfig& cfg, double t);

/// Field energy of a snapshot: (V/L) * (1/2) int [eps0 |E|^2 + mu0 |H|^2] dz
/// by trapezoid quadrature on the snapshot grid.
double field_energy(const FieldSnapshot& snap, const CavityConfig& cfg);

/// Central-difference residuals of all four sign pairings at time t. The
/// source must be evaluable at t - dt, t, t + dt on one fixed grid. Norms
/// are sqrt(dz * sum_i |r_i|^2) over interior points, so they approximate
/// the continuum L2 norm and halve by 4 under second-order convergence.
ResidualReport maxwell_residuals(const SnapshotFn& source,
                                 const CavityConfig& cfg, double t, double dt);

}  // namespace cavityfield

#endif
