// cavityfield: synthesize cavity field solutions, scan duality rotations,
// run residual convergence studies, evaluate quantum expectation values and
// verify the whole invariant battery from one JSON config.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "cavityfield/config_io.hpp"
#include "cavityfield/emitters.hpp"
#include "cavityfield/verify.hpp"

namespace {

using namespace cavityfield;

int write_output(const std::string& payload, const std::string& cli_path,
                 const RunConfig& config) {
  const std::string& path = cli_path.empty() ? config.output.path : cli_path;
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << payload;
  return 0;
}

Family family_from(int value) {
  if (value == 1) return Family::first;
  if (value == 2) return Family::second;
  throw std::invalid_argument("--family must be 1 or 2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free electromagnetic field in a 1D cavity: classical solution "
               "families, duality rotations and truncated-Fock quantization"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  int family = 1;
  double t = 0.0;
  bool t_given = false;
  int levels = 4;
  int angles = 16;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file")->required();
    cmd->add_option("--out", out_path, "output path (default: config output.path or stdout)");
  };

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant battery, report JSONL");
  add_common(verify_cmd);

  CLI::App* fields_cmd = app.add_subcommand("fields", "emit a field snapshot of one family");
  add_common(fields_cmd);
  fields_cmd->add_option("--family", family, "solution family (1 or 2)")->check(CLI::Range(1, 2));
  fields_cmd->add_option("--t", t, "snapshot time (default: config time.t)")->each([&](const std::string&) { t_given = true; });

  CLI::App* scan_cmd = app.add_subcommand("duality-scan", "energy and residuals over a theta grid");
  add_common(scan_cmd);
  scan_cmd->add_option("--family", family, "solution family (1 or 2)")->check(CLI::Range(1, 2));
  scan_cmd->add_option("--angles", angles, "number of angles over [0, 2pi)")->check(CLI::PositiveNumber);

  CLI::App* conv_cmd = app.add_subcommand("convergence", "residual norms under (dz, dt) halving");
  add_common(conv_cmd);
  conv_cmd->add_option("--family", family, "solution family (1 or 2)")->check(CLI::Range(1, 2));
  conv_cmd->add_option("--levels", levels, "number of refinement levels (>= 2)");

  CLI::App* quantum_cmd = app.add_subcommand("quantum-expect", "expectation values of the field operators");
  add_common(quantum_cmd);
  std::string q_family = "1";
  double alpha_re = 0.0, alpha_im = 0.0, alpha2_re = 0.0, alpha2_im = 0.0;
  int mode = 0;
  std::string dump_path;
  quantum_cmd->add_option("--family", q_family, "1, 2 or combined")
      ->check(CLI::IsMember({"1", "2", "combined"}));
  quantum_cmd->add_option("--t", t, "evaluation time (default: config time.t)")->each([&](const std::string&) { t_given = true; });
  quantum_cmd->add_option("--alpha-re", alpha_re, "coherent amplitude, real part");
  quantum_cmd->add_option("--alpha-im", alpha_im, "coherent amplitude, imaginary part");
  quantum_cmd->add_option("--alpha2-re", alpha2_re, "family-2 coherent amplitude, real part (combined)");
  quantum_cmd->add_option("--alpha2-im", alpha2_im, "family-2 coherent amplitude, imaginary part (combined)");
  quantum_cmd->add_option("--mode", mode, "mode index alpha (default: first configured mode)");
  quantum_cmd->add_option("--dump-ops", dump_path, "also dump the E/H operator matrices as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig config = load_run_config(config_path);
    const double eval_t = t_given ? t : config.time.t;

    if (verify_cmd->parsed()) {
      const VerifyReport report = run_verify(config);
      const int status = write_output(render_verify_jsonl(report), out_path, config);
      if (status != 0) return status;
      return report.all_pass() ? 0 : 1;
    }
    if (fields_cmd->parsed()) {
      const Table table = fields_table(config, family_from(family), eval_t);
      return write_output(render(table, config.output.format), out_path, config);
    }
    if (scan_cmd->parsed()) {
      const Table table = duality_scan_table(config, family_from(family), angles);
      return write_output(render(table, config.output.format), out_path, config);
    }
    if (conv_cmd->parsed()) {
      const Table table = convergence_table(config, family_from(family), levels);
      return write_output(render(table, config.output.format), out_path, config);
    }
    if (quantum_cmd->parsed()) {
      QuantumExpectOptions options;
      options.combined = q_family == "combined";
      options.family = q_family == "2" ? Family::second : Family::first;
      options.t = eval_t;
      options.alpha = {alpha_re, alpha_im};
      options.alpha2 = {alpha2_re, alpha2_im};
      options.mode = mode;
      if (!dump_path.empty()) {
        const int alpha = options.mode != 0 ? options.mode
                          : config.modes.empty() ? 1
                                                 : config.modes.front().alpha.value;
        const FockContext ctx = FockContext::for_mode(
            config.cavity, ModeIndex(alpha), config.fock.dim, options.combined ? 2 : 1);
        double c_const = 0.0;
        for (const ModeState& state : config.modes)
          if (state.alpha.value == alpha) c_const = state.C_const;
        const FieldOps ops =
            options.combined
                ? combined_field_ops(ctx, config.cavity, ModeIndex(alpha),
                                     config.cavity.L / 2.0, options.t, c_const)
                : field_operators(options.family, ctx, config.cavity,
                                  ModeIndex(alpha), config.cavity.L / 2.0, options.t);
        nlohmann::json dump;
        dump["E"] = operator_dump(ops.E);
        dump["H"] = operator_dump(ops.H);
        std::ofstream out(dump_path, std::ios::binary);
        if (!out) {
          std::cerr << "error: cannot write " << dump_path << "\n";
          return 2;
        }
        out << dump.dump() << "\n";
      }
      const Table table = quantum_expect_table(config, options);
      return write_output(render(table, config.output.format), out_path, config);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
