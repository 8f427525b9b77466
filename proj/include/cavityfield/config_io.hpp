#ifndef CAVITYFIELD_CONFIG_IO_HPP
#define CAVITYFIELD_CONFIG_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cavityfield/classical.hpp"

namespace cavityfield {

enum class OutputFormat { csv, json };

struct GridSpec {
  int n_points = 513;
};

struct TimeSpec {
  double t = 0.0;
  double dt = 0.0;  // 0 -> default T/512 of the slowest configured mode
};

struct FockSpec {
  int dim = 32;
};

struct OutputSpec {
  OutputFormat format = OutputFormat::csv;
  std::string path;  // empty -> stdout
};

/// Full run description: cavity constants, mode amplitudes, grid, time,
/// Fock truncation and output routing.
struct RunConfig {
  CavityConfig cavity;
  std::vector<ModeState> modes;
  GridSpec grid;
  TimeSpec time;
  FockSpec fock;
  OutputSpec output;

  double dt_or_default() const;
  double min_nu() const;  // smallest mode frequency; cavity fundamental if no modes
};

/// Parse a config document. Cavity constants live at the top level
/// ({L, V, epsilon0, mu0, hbar, mass, unit_system}, omitted ones default
/// to 1 / natural units); modes under "modes" as
/// {alpha, C1:[re,im], C2:[re,im], C_prime:[re,im], C_const}.
/// Errors name the offending key, e.g. "fock.dim must be >= 2".
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::string& path);

}  // namespace cavityfield

#endif
