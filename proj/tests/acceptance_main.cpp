// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [path-to-cavityfield-cli]   (the CLI path is needed only
// for the byte-determinism criterion).

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cavityfield/duality.hpp"
#include "cavityfield/emitters.hpp"
#include "cavityfield/fock.hpp"
#include "cavityfield/verify.hpp"

using namespace cavityfield;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

int failures = 0;

void report(int number, const std::string& name, bool passed,
            const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", passed ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!passed) ++failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

CavityConfig natural_cavity() {
  CavityConfig cfg;
  cfg.L = kPi;
  return cfg;
}

std::vector<ModeState> cosine_mode() {
  return {ModeState::physical(1, {0.5, 0.0})};
}

SnapshotFn solution_source(const std::vector<ModeState>& modes,
                           const CavityConfig& cfg, const ZGrid& grid,
                           bool second) {
  return [&modes, &cfg, grid, second](double t) {
    return second ? synthesize_second_solution(modes, cfg, grid, t)
                  : synthesize_first_solution(modes, cfg, grid, t);
  };
}

std::vector<ResidualReport> refine(const std::vector<ModeState>& modes,
                                   const CavityConfig& cfg, bool second,
                                   double t, int levels) {
  std::vector<ResidualReport> out;
  for (int level = 0; level < levels; ++level) {
    const ZGrid grid = ZGrid::uniform((512 << level) + 1, cfg.L);
    const double dt = 2.0 * kPi / 512.0 / (1 << level);
    out.push_back(maxwell_residuals(solution_source(modes, cfg, grid, second), cfg,
                                    t, dt));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const CavityConfig cfg = natural_cavity();
  const std::vector<ModeState> modes = cosine_mode();
  const double t_eval = 2.2;

  // 1. ladder algebra on the truncated space, dim 16
  {
    FockContext ctx{16, 1.0, 1.0, 1.0, 1};
    const auto [a, ad] = ladder_ops(ctx);
    const OperatorMatrix comm = commutator(a, ad);
    double block = 0.0;
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j)
        block = std::max(block, std::abs(comm(i, j) - (i == j ? Complex{1.0, 0.0}
                                                              : Complex{})));
    const double corner = std::abs(comm(15, 15) - Complex{-15.0, 0.0});
    const bool passed = block <= 1e-13 && corner <= 3e-14;
    report(1, "ladder algebra: [a, a+] = I on the clean block, corner -15", passed,
           "block=" + fmt(block) + " tol=1e-13, corner dev=" + fmt(corner) +
               " tol=3e-14 (ulp scale)");
  }

  // 2. canonical commutator, natural units, dim 16
  {
    FockContext ctx{16, 1.0, 1.0, 1.0, 1};
    const auto [q, p] = canonical_ops(ctx);
    const OperatorMatrix comm = commutator(q, p);
    double worst = 0.0;
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j)
        worst = std::max(worst, std::abs(comm(i, j) - (i == j ? kI : Complex{})));
    report(2, "canonical commutator [q, p] = i hbar on the clean block",
           worst <= 1e-13, "entrywise=" + fmt(worst) + " tol=1e-13");
  }

  // 3. vacuum energy, dim 32
  {
    FockContext ctx{32, 1.0, 1.0, 1.0, 1};
    const Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(hamiltonian_op(ctx));
    const double ground = solver.eigenvalues().minCoeff();
    const double rel = std::abs(ground - 0.5) / 0.5;
    report(3, "vacuum energy: ground eigenvalue = hbar nu / 2", rel <= 1e-12,
           "rel=" + fmt(rel) + " tol=1e-12");
  }

  // 4. classical energy conservation and the two second-family routes
  {
    const ZGrid grid = ZGrid::uniform(129, cfg.L);
    double lo = 1e300, hi = 0.0, h2_worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = 10.0 * 2.0 * kPi * i / 999.0;
      const double energy = hamiltonian_h1(modes, cfg, grid, t).mode_sum;
      lo = std::min(lo, energy);
      hi = std::max(hi, energy);
      const EnergyPair2 pair = hamiltonian_h2(modes, cfg, t);
      h2_worst = std::max(h2_worst, std::abs(pair.from_qprime - pair.from_canonical) /
                                        std::abs(pair.from_qprime));
    }
    const double spread = (hi - lo) / (0.5 * (hi + lo));
    const bool passed = spread <= 1e-12 && h2_worst <= 1e-13;
    report(4, "energy conservation over 10 periods; both H2 routes agree", passed,
           "spread=" + fmt(spread) + " tol=1e-12, route dev=" + fmt(h2_worst) +
               " tol=1e-13");
  }

  // 5. first solution: standard-pair residual convergence at second order
  {
    const auto levels = refine(modes, cfg, false, t_eval, 4);
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
      worst = std::max(worst, std::abs(std::log2(levels[k].ampere_standard /
                                                 levels[k + 1].ampere_standard) -
                                       2.0));
      worst = std::max(worst, std::abs(std::log2(levels[k].faraday_standard /
                                                 levels[k + 1].faraday_standard) -
                                       2.0));
    }
    report(5, "first solution: standard residual order in [1.8, 2.2]", worst <= 0.2,
           "max |order-2|=" + fmt(worst) + " over 3 halvings from dz=L/512");
  }

  // 6. second solution: dual pair converges, standard pair stays finite
  {
    const auto levels = refine(modes, cfg, true, t_eval, 4);
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
      worst = std::max(worst, std::abs(std::log2(levels[k].ampere_dual /
                                                 levels[k + 1].ampere_dual) -
                                       2.0));
      worst = std::max(worst, std::abs(std::log2(levels[k].faraday_dual /
                                                 levels[k + 1].faraday_dual) -
                                       2.0));
    }
    const ResidualReport& finest = levels.back();
    const double ratio = std::min(finest.ampere_standard, finest.faraday_standard) /
                         std::max(finest.ampere_dual, finest.faraday_dual);
    const bool passed = worst <= 0.2 && ratio > 1e3;
    report(6, "second solution: dual order in [1.8, 2.2], standard > 1e3 x dual",
           passed, "max |order-2|=" + fmt(worst) + ", standard/dual=" + fmt(ratio));
  }

  // 7. duality invariance and the quarter-turn swap
  {
    const ZGrid grid = ZGrid::uniform(513, cfg.L);
    const FieldSnapshot snap = synthesize_first_solution(modes, cfg, grid, t_eval);
    const double energy = field_energy(snap, cfg);
    double spread = 0.0;
    for (int j = 0; j < 16; ++j) {
      const double rotated = field_energy(
          duality_rotate(snap, DualityAngle(2.0 * kPi * j / 16.0), cfg), cfg);
      spread = std::max(spread, std::abs(rotated - energy) / energy);
    }
    const FieldSnapshot swapped = duality_rotate(snap, DualityAngle(kPi / 2.0), cfg);
    double swap_dev = 0.0;
    for (std::size_t i = 0; i < snap.E_x.size(); ++i) {
      swap_dev = std::max(swap_dev, std::abs(swapped.E_x[i] - snap.H_y[i]));
      swap_dev = std::max(swap_dev, std::abs(swapped.H_y[i] + snap.E_x[i]));
    }
    const bool passed = spread <= 1e-12 && swap_dev == 0.0;
    report(7, "duality: energy invariant over 16 angles; pi/2 swap exact", passed,
           "spread=" + fmt(spread) + " tol=1e-12, swap dev=" + fmt(swap_dev));
  }

  // 8. complexification identity on the two-family tensor product, dim 8
  {
    FockContext pair = FockContext::for_mode(cfg, ModeIndex(1), 8, 2);
    FockContext single = pair;
    single.families = 1;
    const double z = 0.4 * cfg.L, t = 0.9;
    const FieldOps combined = combined_field_ops(pair, cfg, ModeIndex(1), z, t);
    const FieldOps fam1 = field_operators(Family::first, single, cfg, ModeIndex(1), z, t);
    const FieldOps fam2 = field_operators(Family::second, single, cfg, ModeIndex(1), z, t);
    const OperatorMatrix id = OperatorMatrix::Identity(8, 8);
    double worst = 0.0;
    worst = std::max(worst,
                     (hermitian_part(combined.E) - tensor(fam1.E, id)).cwiseAbs().maxCoeff());
    worst = std::max(worst, (anti_hermitian_part(combined.E) - kI * tensor(id, fam2.E))
                                .cwiseAbs()
                                .maxCoeff());
    worst = std::max(worst,
                     (hermitian_part(combined.H) - tensor(id, fam2.H)).cwiseAbs().maxCoeff());
    worst = std::max(worst, (anti_hermitian_part(combined.H) - kI * tensor(fam1.H, id))
                                .cwiseAbs()
                                .maxCoeff());
    report(8, "complexification: E = E1 + i E2 and H = H2 + i H1 entrywise",
           worst <= 1e-13, "entrywise=" + fmt(worst) + " tol=1e-13");
  }

  // 9. correspondence: coherent expectation tracks the classical field
  {
    const FockContext ctx = FockContext::for_mode(cfg, ModeIndex(1), 32);
    const Complex amp{1.0, 0.0};
    const QuantumState psi = coherent_state(amp, ctx);
    const Complex c1 = std::sqrt(ctx.hbar / (2.0 * ctx.mass * ctx.nu)) * std::conj(amp);
    const std::vector<ModeState> twin{ModeState{ModeIndex(1), c1, std::conj(c1), {}, 0.0}};
    const ZGrid grid = ZGrid::uniform(65, cfg.L);
    double worst = 0.0;
    for (int step = 0; step < 32; ++step) {
      const double t = 2.0 * kPi * step / 32.0;
      const FieldSnapshot classical = synthesize_first_solution(twin, cfg, grid, t);
      for (int i = 0; i < grid.size(); ++i) {
        const FieldOps ops =
            field_operators(Family::first, ctx, cfg, ModeIndex(1), grid.z(i), t);
        worst = std::max(worst, std::abs(expectation(ops.E, psi) -
                                         classical.E_x[static_cast<std::size_t>(i)]));
      }
    }
    report(9, "correspondence: coherent <E> tracks the classical field", worst <= 1e-8,
           "max dev=" + fmt(worst) + " tol=1e-8 (dim=32, |alpha|=1)");
  }

  // 10. byte determinism of the fields subcommand
  {
    bool passed = false;
    std::string detail;
    if (argc < 2) {
      detail = "cavityfield CLI path not supplied";
    } else {
      namespace fs = std::filesystem;
      const fs::path dir = fs::temp_directory_path() / "cavityfield_acceptance";
      fs::create_directories(dir);
      const fs::path cfg_path = dir / "config.json";
      const fs::path out1 = dir / "run1.csv";
      const fs::path out2 = dir / "run2.csv";
      std::ofstream(cfg_path)
          << R"({"L": 3.141592653589793, "modes": [{"alpha": 1, "C1": [0.5, 0.0]}],)"
          << R"( "grid": {"n_points": 257}, "time": {"t": 0.37, "dt": 0.01},)"
          << R"( "fock": {"dim": 16}})";
      const auto run = [&](const fs::path& out) {
        const std::string cmd = std::string(argv[1]) + " fields --config " +
                                cfg_path.string() + " --family 1 --t 0.9 --out " +
                                out.string();
        return std::system(cmd.c_str());
      };
      const int status1 = run(out1);
      const int status2 = run(out2);
      if (status1 != 0 || status2 != 0) {
        detail = "CLI exited nonzero";
      } else {
        std::ifstream f1(out1, std::ios::binary), f2(out2, std::ios::binary);
        std::stringstream b1, b2;
        b1 << f1.rdbuf();
        b2 << f2.rdbuf();
        passed = !b1.str().empty() && b1.str() == b2.str();
        detail = passed ? "two runs, byte-identical output ("
                              + std::to_string(b1.str().size()) + " bytes)"
                        : "outputs differ";
      }
    }
    report(10, "determinism: repeated fields runs are byte-identical", passed, detail);
  }

  if (failures == 0) std::printf("acceptance: all criteria PASS\n");
  return failures == 0 ? 0 : 1;
}
