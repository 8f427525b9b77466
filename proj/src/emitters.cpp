#include "cavityfield/emitters.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cavityfield/duality.hpp"

namespace cavityfield {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Fixed 17-significant-digit rendering; '.' decimal under the "C" locale.
std::string format_cell(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

FieldSnapshot synthesize(const RunConfig& config, Family family,
                         const ZGrid& grid, double t) {
  if (family == Family::first)
    return synthesize_first_solution(config.modes, config.cavity, grid, t);
  return synthesize_second_solution(config.modes, config.cavity, grid, t);
}

SnapshotFn snapshot_source(const RunConfig& config, Family family,
                           const ZGrid& grid) {
  return [&config, family, grid](double t) {
    return synthesize(config, family, grid, t);
  };
}

double order_between(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0))
    return std::numeric_limits<double>::quiet_NaN();
  return std::log2(coarse / fine);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_cell(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::json doc;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) doc["rows"].push_back(row);
  return doc.dump() + "\n";
}

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::csv ? to_csv(table) : to_json(table);
}

Table fields_table(const RunConfig& config, Family family, double t) {
  const ZGrid grid = ZGrid::uniform(config.grid.n_points, config.cavity.L);
  const FieldSnapshot snap = synthesize(config, family, grid, t);
  Table table{{"z", "Re_E_x", "Im_E_x", "Re_H_y", "Im_H_y"}, {}};
  table.rows.reserve(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) {
    const auto j = static_cast<std::size_t>(i);
    table.rows.push_back({grid.z(i), snap.E_x[j].real(), snap.E_x[j].imag(),
                          snap.H_y[j].real(), snap.H_y[j].imag()});
  }
  return table;
}

Table duality_scan_table(const RunConfig& config, Family family, int n_angles) {
  require(n_angles >= 1, "duality scan needs n_angles >= 1");
  const ZGrid grid = ZGrid::uniform(config.grid.n_points, config.cavity.L);
  const SnapshotFn source = snapshot_source(config, family, grid);
  const double t = config.time.t;
  const double dt = config.dt_or_default();
  Table table{{"theta", "energy", "ampere_std", "faraday_std", "ampere_dual",
               "faraday_dual"},
              {}};
  for (int j = 0; j < n_angles; ++j) {
    const DualityAngle theta(2.0 * std::numbers::pi * j / n_angles);
    const InvarianceReport report =
        invariance_report(source, theta, config.cavity, t, dt);
    table.rows.push_back({theta.radians(), report.energy_after,
                          report.residuals_after.ampere_standard,
                          report.residuals_after.faraday_standard,
                          report.residuals_after.ampere_dual,
                          report.residuals_after.faraday_dual});
  }
  return table;
}

Table convergence_table(const RunConfig& config, Family family, int levels) {
  require(levels >= 2, "convergence study needs levels >= 2 to estimate an order");
  const double t = config.time.t;
  const double dt0 = config.dt_or_default();
  Table table{{"level", "dz", "dt", "ampere_std", "faraday_std", "ampere_dual",
               "faraday_dual", "order_ampere_std", "order_faraday_std",
               "order_ampere_dual", "order_faraday_dual"},
              {}};
  ResidualReport previous;
  for (int level = 0; level < levels; ++level) {
    const int n_points = ((config.grid.n_points - 1) << level) + 1;
    const ZGrid grid = ZGrid::uniform(n_points, config.cavity.L);
    const double dt = dt0 / static_cast<double>(1 << level);
    const ResidualReport report =
        maxwell_residuals(snapshot_source(config, family, grid), config.cavity, t, dt);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    table.rows.push_back(
        {static_cast<double>(level), report.dz, report.dt,
         report.ampere_standard, report.faraday_standard, report.ampere_dual,
         report.faraday_dual,
         level == 0 ? nan : order_between(previous.ampere_standard, report.ampere_standard),
         level == 0 ? nan : order_between(previous.faraday_standard, report.faraday_standard),
         level == 0 ? nan : order_between(previous.ampere_dual, report.ampere_dual),
         level == 0 ? nan : order_between(previous.faraday_dual, report.faraday_dual)});
    previous = report;
  }
  return table;
}

Table quantum_expect_table(const RunConfig& config,
                           const QuantumExpectOptions& options) {
  int alpha = options.mode;
  double C_const = 0.0;
  if (alpha == 0) {
    alpha = config.modes.empty() ? 1 : config.modes.front().alpha.value;
  }
  for (const ModeState& state : config.modes)
    if (state.alpha.value == alpha) C_const = state.C_const;

  const FockContext ctx = FockContext::for_mode(
      config.cavity, ModeIndex(alpha), config.fock.dim, options.combined ? 2 : 1);
  const QuantumState psi = [&] {
    if (!options.combined) return coherent_state(options.alpha, ctx);
    FockContext factor = ctx;
    factor.families = 1;
    const QuantumState psi1 = coherent_state(options.alpha, factor);
    const QuantumState psi2 = coherent_state(options.alpha2, factor);
    return QuantumState(tensor_vector(psi1.amplitudes, psi2.amplitudes));
  }();

  // z enters the operators only through the sin/cos mode profiles (plus the
  // identity shift on the combined H), so evaluate them once at a reference
  // plane with k z = pi/4 and rescale the expectations per grid point. This
  // keeps the two-family tensor-product tables affordable at dim^2.
  const ModeConstants mc = mode_constants(config.cavity, ModeIndex(alpha));
  const double z_ref = config.cavity.L / (4.0 * alpha);
  const double sin_ref = std::sin(mc.k * z_ref);
  const double cos_ref = std::cos(mc.k * z_ref);
  const FieldOps ref =
      options.combined
          ? combined_field_ops(ctx, config.cavity, ModeIndex(alpha), z_ref,
                               options.t, 0.0)
          : field_operators(options.family, ctx, config.cavity, ModeIndex(alpha),
                            z_ref, options.t);
  const double shift = options.combined ? C_const : 0.0;
  const Complex e_ref = expectation(ref.E, psi);
  const Complex h_ref = expectation(ref.H, psi);
  const double e_sq_ref = (ref.E * psi.amplitudes).squaredNorm();
  const double h_sq_ref = (ref.H * psi.amplitudes).squaredNorm();

  const ZGrid grid = ZGrid::uniform(config.grid.n_points, config.cavity.L);
  Table table{{"z", "t", "Re_E", "Im_E", "E_sq", "Re_H", "Im_H", "H_sq"}, {}};
  for (int i = 0; i < grid.size(); ++i) {
    const double z = grid.z(i);
    const double se = std::sin(mc.k * z) / sin_ref;
    const double ce = std::cos(mc.k * z) / cos_ref;
    const Complex e = se * e_ref;
    const Complex h = ce * h_ref + shift;
    const double e_sq = se * se * e_sq_ref;
    const double h_sq =
        ce * ce * h_sq_ref + 2.0 * shift * ce * h_ref.real() + shift * shift;
    table.rows.push_back(
        {z, options.t, e.real(), e.imag(), e_sq, h.real(), h.imag(), h_sq});
  }
  return table;
}

nlohmann::json operator_dump(const OperatorMatrix& op) {
  nlohmann::json doc;
  doc["dim"] = op.rows();
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < op.rows(); ++i)
    for (Eigen::Index j = 0; j < op.cols(); ++j)
      entries.push_back({op(i, j).real(), op(i, j).imag()});
  doc["entries"] = std::move(entries);
  return doc;
}

}  // namespace cavityfield
