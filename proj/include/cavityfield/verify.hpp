#ifndef CAVITYFIELD_VERIFY_HPP
#define CAVITYFIELD_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "cavityfield/config_io.hpp"

namespace cavityfield {

struct CheckResult {
  std::string check_name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string note;  // set when a check could not run at all
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Run the whole invariant battery on a configured system. Tolerances are
/// pinned defaults; `tolerance_overrides` (keyed by check name) exists for
/// fault-injection tests and ad-hoc tightening.
VerifyReport run_verify(const RunConfig& config,
                        const std::map<std::string, double>& tolerance_overrides = {});

/// One JSON object per line: {"check_name":..., "status":..., "measured":...,
/// "tolerance":...}.
std::string render_verify_jsonl(const VerifyReport& report);

}  // namespace cavityfield

#endif
