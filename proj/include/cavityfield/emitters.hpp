#ifndef CAVITYFIELD_EMITTERS_HPP
#define CAVITYFIELD_EMITTERS_HPP

#include <string>
#include <vector>

#include "cavityfield/config_io.hpp"
#include "cavityfield/fock.hpp"

namespace cavityfield {

/// Column-labelled numeric table. Rendering is deterministic: CSV cells use
/// '.' decimal and 17 significant digits, so equal inputs give equal bytes.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string render(const Table& table, OutputFormat format);

/// Field snapshot of one family on the configured grid at time t.
Table fields_table(const RunConfig& config, Family family, double t);

/// theta scan: rows at theta = 2*pi*j/n_angles with the rotated energy and
/// residual norms of the requested family.
Table duality_scan_table(const RunConfig& config, Family family, int n_angles);

/// Residual norms across `levels` successive halvings of (dz, dt), with
/// observed-order columns log2(r_k / r_{k+1}) on each refined row.
Table convergence_table(const RunConfig& config, Family family, int levels);

struct QuantumExpectOptions {
  Family family = Family::first;
  bool combined = false;
  double t = 0.0;
  Complex alpha{0.0, 0.0};   // coherent amplitude, family-1 factor
  Complex alpha2{0.0, 0.0};  // family-2 factor (combined only)
  int mode = 0;              // 0 -> first configured mode
};

/// Expectation-value table over the grid: z, t, Re<E>, Im<E>, <E+E>,
/// Re<H>, Im<H>, <H+H>. For Hermitian family operators the squared columns
/// reduce to <E^2>, <H^2>.
Table quantum_expect_table(const RunConfig& config,
                           const QuantumExpectOptions& options);

/// Debug dump: {"dim": n, "entries": [[re, im], ...]} in row-major order.
nlohmann::json operator_dump(const OperatorMatrix& op);

}  // namespace cavityfield

#endif
