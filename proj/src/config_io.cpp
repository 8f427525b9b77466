#include "cavityfield/config_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace cavityfield {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known) fail("unknown key \"" + (path.empty() ? item.key() : path + "." + item.key()) + "\"");
  }
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path + " must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path + " must be an integer");
  return v.get<int>();
}

double number_or(const json& obj, const char* key, const std::string& path,
                 double fallback) {
  if (!obj.contains(key)) return fallback;
  return as_number(obj.at(key), path);
}

Complex as_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(path + " must be a [re, im] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

CavityConfig parse_cavity(const json& doc) {
  CavityConfig cfg;
  cfg.L = number_or(doc, "L", "L", 1.0);
  cfg.V = number_or(doc, "V", "V", 1.0);
  cfg.epsilon0 = number_or(doc, "epsilon0", "epsilon0", 1.0);
  cfg.mu0 = number_or(doc, "mu0", "mu0", 1.0);
  cfg.hbar = number_or(doc, "hbar", "hbar", 1.0);
  if (doc.contains("mass")) {
    const json& mass = doc.at("mass");
    if (mass.is_number()) {
      cfg.default_mass = mass.get<double>();
    } else if (mass.is_array()) {
      for (std::size_t i = 0; i < mass.size(); ++i)
        cfg.mode_masses.push_back(as_number(mass[i], "mass[" + std::to_string(i) + "]"));
      if (cfg.mode_masses.empty()) fail("mass array must not be empty");
    } else {
      fail("mass must be a number or an array of numbers");
    }
  }
  if (doc.contains("unit_system")) {
    const json& units = doc.at("unit_system");
    if (!units.is_string()) fail("unit_system must be \"SI\" or \"natural\"");
    const std::string tag = units.get<std::string>();
    if (tag == "SI" || tag == "si")
      cfg.units = UnitSystem::SI;
    else if (tag == "natural")
      cfg.units = UnitSystem::Natural;
    else
      fail("unit_system must be \"SI\" or \"natural\", got \"" + tag + "\"");
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& err) {
    fail(std::string("cavity config: ") + err.what());
  }
  return cfg;
}

ModeState parse_mode(const json& entry, const std::string& path) {
  if (!entry.is_object()) fail(path + " must be an object");
  check_keys(entry, path, {"alpha", "C1", "C2", "C_prime", "C_const"});
  if (!entry.contains("alpha")) fail(path + ".alpha is required");
  const int alpha = as_int(entry.at("alpha"), path + ".alpha");
  if (alpha < 1) fail(path + ".alpha must be >= 1, got " + std::to_string(alpha));
  const Complex C1 = entry.contains("C1")
                         ? as_complex(entry.at("C1"), path + ".C1")
                         : Complex{0.0, 0.0};
  const Complex C2 = entry.contains("C2")
                         ? as_complex(entry.at("C2"), path + ".C2")
                         : std::conj(C1);  // omitted C2 -> physical-real mode
  const Complex C_prime = entry.contains("C_prime")
                              ? as_complex(entry.at("C_prime"), path + ".C_prime")
                              : Complex{0.0, 0.0};
  const double C_const = number_or(entry, "C_const", path + ".C_const", 0.0);
  return ModeState{ModeIndex(alpha), C1, C2, C_prime, C_const};
}

}  // namespace

double RunConfig::min_nu() const {
  int alpha_min = modes.empty() ? 1 : modes.front().alpha.value;
  for (const ModeState& state : modes)
    alpha_min = std::min(alpha_min, state.alpha.value);
  return mode_constants(cavity, ModeIndex(alpha_min)).nu;
}

double RunConfig::dt_or_default() const {
  if (time.dt > 0.0) return time.dt;
  return 2.0 * std::numbers::pi / min_nu() / 512.0;
}

RunConfig parse_run_config(const json& doc) {
  if (!doc.is_object()) fail("config document must be a JSON object");
  check_keys(doc, "", {"L", "V", "epsilon0", "mu0", "hbar", "mass", "unit_system",
                       "modes", "grid", "time", "fock", "output"});
  RunConfig config;
  config.cavity = parse_cavity(doc);

  if (doc.contains("modes")) {
    const json& modes = doc.at("modes");
    if (!modes.is_array()) fail("modes must be an array");
    for (std::size_t i = 0; i < modes.size(); ++i) {
      config.modes.push_back(parse_mode(modes[i], "modes[" + std::to_string(i) + "]"));
      for (std::size_t j = 0; j < i; ++j)
        if (config.modes[j].alpha.value == config.modes[i].alpha.value)
          fail("modes[" + std::to_string(i) + "].alpha duplicates modes[" +
               std::to_string(j) + "].alpha");
    }
  }
  // Per-mode masses must cover every configured mode.
  for (const ModeState& state : config.modes) config.cavity.mass(state.alpha);

  if (doc.contains("grid")) {
    const json& grid = doc.at("grid");
    if (!grid.is_object()) fail("grid must be an object");
    check_keys(grid, "grid", {"n_points"});
    if (grid.contains("n_points"))
      config.grid.n_points = as_int(grid.at("n_points"), "grid.n_points");
  }
  if (config.grid.n_points < 3) fail("grid.n_points must be >= 3");

  if (doc.contains("time")) {
    const json& time = doc.at("time");
    if (!time.is_object()) fail("time must be an object");
    check_keys(time, "time", {"t", "dt"});
    config.time.t = number_or(time, "t", "time.t", 0.0);
    config.time.dt = number_or(time, "dt", "time.dt", 0.0);
    if (!std::isfinite(config.time.t)) fail("time.t must be finite");
    if (config.time.dt < 0.0) fail("time.dt must be >= 0 (0 selects the default)");
  }

  if (doc.contains("fock")) {
    const json& fock = doc.at("fock");
    if (!fock.is_object()) fail("fock must be an object");
    check_keys(fock, "fock", {"dim"});
    if (fock.contains("dim")) config.fock.dim = as_int(fock.at("dim"), "fock.dim");
  }
  if (config.fock.dim < 2) fail("fock.dim must be >= 2");

  if (doc.contains("output")) {
    const json& output = doc.at("output");
    if (!output.is_object()) fail("output must be an object");
    check_keys(output, "output", {"format", "path"});
    if (output.contains("format")) {
      const json& format = output.at("format");
      if (!format.is_string()) fail("output.format must be \"csv\" or \"json\"");
      const std::string tag = format.get<std::string>();
      if (tag == "csv")
        config.output.format = OutputFormat::csv;
      else if (tag == "json")
        config.output.format = OutputFormat::json;
      else
        fail("output.format must be \"csv\" or \"json\", got \"" + tag + "\"");
    }
    if (output.contains("path")) {
      if (!output.at("path").is_string()) fail("output.path must be a string");
      config.output.path = output.at("path").get<std::string>();
    }
  }
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    fail("config is not valid JSON: " + std::string(err.what()));
  }
  return parse_run_config(doc);
}

}  // namespace cavityfield
