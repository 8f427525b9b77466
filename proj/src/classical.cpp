#include "cavityfield/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cavityfield {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Ascending-alpha copy with duplicate rejection; fixes the summation order.
std::vector<ModeState> sorted_states(std::span<const ModeState> states) {
  std::vector<ModeState> sorted(states.begin(), states.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ModeState& a, const ModeState& b) { return a.alpha.value < b.alpha.value; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    require(sorted[i].alpha.value != sorted[i - 1].alpha.value,
            "duplicate mode alpha=" + std::to_string(sorted[i].alpha.value));
  return sorted;
}

void require_physical_real(const ModeState& state, bool need_real_C_prime) {
  require(state.physical_real(),
          "mode alpha=" + std::to_string(state.alpha.value) +
              " has C2 != conj(C1); the energy of a complex representative is "
              "not the physical energy");
  if (need_real_C_prime)
    require(state.C_prime.imag() == 0.0,
            "mode alpha=" + std::to_string(state.alpha.value) +
                " has complex C_prime; the energy of a complex representative "
                "is not the physical energy");
}

double trapezoid(const std::vector<double>& samples, double dz) {
  const std::size_t n = samples.size();
  double sum = 0.5 * (samples.front() + samples.back());
  for (std::size_t i = 1; i + 1 < n; ++i) sum += samples[i];
  return sum * dz;
}

}  // namespace

bool ModeState::physical_real() const { return C2 == std::conj(C1); }

ModeState ModeState::physical(int alpha, Complex C1, Complex C_prime,
                              double C_const) {
  return ModeState{ModeIndex(alpha), C1, std::conj(C1), C_prime, C_const};
}

void FieldSnapshot::validate() const {
  const auto n = static_cast<std::size_t>(grid.size());
  require(E_x.size() == n && H_y.size() == n,
          "snapshot sample count does not match its grid");
  if (!real_tagged) return;
  double scale = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::max({scale, std::abs(E_x[i]), std::abs(H_y[i])});
    worst = std::max({worst, std::abs(E_x[i].imag()), std::abs(H_y[i].imag())});
  }
  require(worst <= 1e-12 * std::max(scale, 1e-300),
          "snapshot tagged real has imaginary parts above 1e-12 of the field scale");
}

Complex q_of_t(const ModeState& state, double nu, double t) {
  return state.C1 * std::exp(kI * nu * t) + state.C2 * std::exp(-kI * nu * t);
}

Complex q_dot_of_t(const ModeState& state, double nu, double t) {
  return kI * nu * (state.C1 * std::exp(kI * nu * t) - state.C2 * std::exp(-kI * nu * t));
}

Complex q_prime_of_t(const ModeState& state, double nu, double t) {
  require(nu != 0.0, "q' is undefined at nu = 0: the antiderivative changes form");
  return state.C1 / (kI * nu) * std::exp(kI * nu * t) -
         state.C2 / (kI * nu) * std::exp(-kI * nu * t) + state.C_prime;
}

Complex f_alpha(const ModeState& state, const CavityConfig& cfg, double t,
                double z_ref) {
  require(z_ref >= 0.0 && z_ref <= cfg.L * (1.0 + 1e-12),
          "z_ref outside the cavity [0, L]");
  const ModeConstants mc = mode_constants(cfg, state.alpha);
  // The integrand A cos(k z)[q k/mu0 - (d2q/dt2) eps0/k] collapses to
  // (2k/mu0) A cos(k z) q once d2q/dt2 = -nu^2 q and mu0 eps0 nu^2 = k^2 are
  // used, so the integral is (2k/mu0) A cos(k z_ref) (q'(t) - C_prime).
  const Complex integral = q_prime_of_t(state, mc.nu, t) - state.C_prime;
  return (2.0 * mc.k / cfg.mu0) * mc.A * std::cos(mc.k * z_ref) * integral +
         state.C_const;
}

FieldSnapshot synthesize_first_solution(std::span<const ModeState> states,
                                        const CavityConfig& cfg,
                                        const ZGrid& grid, double t) {
  cfg.validate();
  const auto sorted = sorted_states(states);
  FieldSnapshot snap{grid,
                     std::vector<Complex>(static_cast<std::size_t>(grid.size())),
                     std::vector<Complex>(static_cast<std::size_t>(grid.size())),
                     t,
                     std::all_of(sorted.begin(), sorted.end(),
                                 [](const ModeState& s) { return s.physical_real(); })};
  for (const ModeState& state : sorted) {
    const ModeConstants mc = mode_constants(cfg, state.alpha);
    const Complex q = q_of_t(state, mc.nu, t);
    const Complex qdot = q_dot_of_t(state, mc.nu, t);
    const Complex e_amp = mc.A * q;
    const Complex h_amp = cfg.epsilon0 * mc.A / mc.k * qdot;
    for (int i = 0; i < grid.size(); ++i) {
      const double kz = mc.k * grid.z(i);
      snap.E_x[static_cast<std::size_t>(i)] += e_amp * std::sin(kz);
      snap.H_y[static_cast<std::size_t>(i)] += h_amp * std::cos(kz);
    }
  }
  return snap;
}

FieldSnapshot synthesize_second_solution(std::span<const ModeState> states,
                                         const CavityConfig& cfg,
                                         const ZGrid& grid, double t) {
  cfg.validate();
  const auto sorted = sorted_states(states);
  FieldSnapshot snap{grid,
                     std::vector<Complex>(static_cast<std::size_t>(grid.size())),
                     std::vector<Complex>(static_cast<std::size_t>(grid.size())),
                     t,
                     std::all_of(sorted.begin(), sorted.end(),
                                 [](const ModeState& s) {
                                   return s.physical_real() && s.C_prime.imag() == 0.0;
                                 })};
  for (const ModeState& state : sorted) {
    const ModeConstants mc = mode_constants(cfg, state.alpha);
    const Complex qprime = q_prime_of_t(state, mc.nu, t);
    // dq'/dt = q in closed form, so the electric sum reuses q directly.
    const Complex e_amp = mc.A * q_of_t(state, mc.nu, t);
    const Complex h_amp = mc.k * mc.A / cfg.mu0 * qprime;
    for (int i = 0; i < grid.size(); ++i) {
      const double kz = mc.k * grid.z(i);
      snap.E_x[static_cast<std::size_t>(i)] += e_amp * std::sin(kz);
      snap.H_y[static_cast<std::size_t>(i)] += h_amp * std::cos(kz);
    }
  }
  return snap;
}

EnergyPair hamiltonian_h1(std::span<const ModeState> states,
                          const CavityConfig& cfg, const ZGrid& grid, double t) {
  cfg.validate();
  const auto sorted = sorted_states(states);
  double mode_sum = 0.0;
  for (const ModeState& state : sorted) {
    require_physical_real(state, false);
    const ModeConstants mc = mode_constants(cfg, state.alpha);
    const double m = cfg.mass(state.alpha);
    const double q = q_of_t(state, mc.nu, t).real();
    const double p = m * q_dot_of_t(state, mc.nu, t).real();
    mode_sum += 0.5 * (m * mc.nu * mc.nu * q * q + p * p / m);
  }
  const FieldSnapshot snap = synthesize_first_solution(states, cfg, grid, t);
  return {mode_sum, field_energy(snap, cfg)};
}

CanonicalPair canonical_double_prime(const ModeState& state,
                                     const CavityConfig& cfg, double t) {
  const ModeConstants mc = mode_constants(cfg, state.alpha);
  const double m = cfg.mass(state.alpha);
  return {mc.nu * q_prime_of_t(state, mc.nu, t),
          m * mc.nu * q_of_t(state, mc.nu, t)};
}

EnergyPair2 hamiltonian_h2(std::span<const ModeState> states,
                           const CavityConfig& cfg, double t) {
  cfg.validate();
  const auto sorted = sorted_states(states);
  double from_qprime = 0.0;
  double from_canonical = 0.0;
  for (const ModeState& state : sorted) {
    require_physical_real(state, true);
    const ModeConstants mc = mode_constants(cfg, state.alpha);
    const double m = cfg.mass(state.alpha);
    const double nu2 = mc.nu * mc.nu;
    const double qp = q_prime_of_t(state, mc.nu, t).real();
    const double q = q_of_t(state, mc.nu, t).real();  // dq'/dt
    from_qprime += 0.5 * (m * nu2 * nu2 * qp * qp + m * nu2 * q * q);
    const CanonicalPair cp = canonical_double_prime(state, cfg, t);
    const double qdd = cp.q_double_prime.real();
    const double pdd = cp.p_double_prime.real();
    from_canonical += 0.5 * (m * nu2 * qdd * qdd + pdd * pdd / m);
  }
  return {from_qprime, from_canonical};
}

double field_energy(const FieldSnapshot& snap, const CavityConfig& cfg) {
  snap.validate();
  const auto n = static_cast<std::size_t>(snap.grid.size());
  std::vector<double> density(n);
  for (std::size_t i = 0; i < n; ++i)
    density[i] = cfg.epsilon0 * std::norm(snap.E_x[i]) + cfg.mu0 * std::norm(snap.H_y[i]);
  return 0.5 * (cfg.V / cfg.L) * trapezoid(density, snap.grid.spacing());
}

ResidualReport maxwell_residuals(const SnapshotFn& source,
                                 const CavityConfig& cfg, double t, double dt) {
  require(dt > 0.0, "residual stencil needs dt > 0");
  const FieldSnapshot before = source(t - dt);
  const FieldSnapshot center = source(t);
  const FieldSnapshot after = source(t + dt);
  before.validate();
  center.validate();
  after.validate();
  const int n = center.grid.size();
  require(n >= 3, "residual stencil needs at least 3 grid points");
  require(before.grid.size() == n && after.grid.size() == n &&
              before.grid.z_max() == center.grid.z_max() &&
              after.grid.z_max() == center.grid.z_max(),
          "snapshot source changed its grid between time samples");

  const double dz = center.grid.spacing();
  double amp_std = 0.0, far_std = 0.0, amp_dual = 0.0, far_dual = 0.0;
  for (int i = 1; i + 1 < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    const Complex dE_dt = (after.E_x[j] - before.E_x[j]) / (2.0 * dt);
    const Complex dH_dt = (after.H_y[j] - before.H_y[j]) / (2.0 * dt);
    const Complex dE_dz = (center.E_x[j + 1] - center.E_x[j - 1]) / (2.0 * dz);
    const Complex dH_dz = (center.H_y[j + 1] - center.H_y[j - 1]) / (2.0 * dz);
    const Complex curl_h_x = -dH_dz;  // (curl H)_x for H = H_y(z) e_y
    const Complex curl_e_y = dE_dz;   // (curl E)_y for E = E_x(z) e_x
    amp_std += std::norm(cfg.epsilon0 * dE_dt - curl_h_x);
    far_std += std::norm(curl_e_y + cfg.mu0 * dH_dt);
    amp_dual += std::norm(cfg.epsilon0 * dE_dt + curl_h_x);
    far_dual += std::norm(curl_e_y - cfg.mu0 * dH_dt);
  }
  return {std::sqrt(dz * amp_std), std::sqrt(dz * far_std),
          std::sqrt(dz * amp_dual), std::sqrt(dz * far_dual), dz, dt};
}

}  // namespace cavityfield
