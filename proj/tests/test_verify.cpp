#include <doctest.h>

#include <numbers>

#include "cavityfield/verify.hpp"

using namespace cavityfield;
using nlohmann::json;

namespace {

RunConfig default_natural_config() {
  json doc{{"L", std::numbers::pi},
           {"modes", json::array({json{{"alpha", 1}, {"C1", {0.5, 0.0}}}})},
           {"grid", {{"n_points", 513}}},
           {"time", {{"t", 2.2}}},
           {"fock", {{"dim", 32}}}};
  return parse_run_config(doc);
}

}  // namespace

TEST_CASE("the default natural-unit config passes the whole battery") {
  const VerifyReport report = run_verify(default_natural_config());
  for (const CheckResult& check : report.checks) {
    INFO(check.check_name, ": measured ", check.measured, " vs tolerance ",
         check.tolerance, " ", check.note);
    CHECK(check.passed);
  }
  CHECK(report.all_pass());
  CHECK(report.checks.size() >= 20);
}

TEST_CASE("fault injection: a corrupted tolerance turns the battery red") {
  const RunConfig config = default_natural_config();
  const VerifyReport report =
      run_verify(config, {{"ladder-commutator-block", -1.0}});
  bool found = false;
  for (const CheckResult& check : report.checks)
    if (check.check_name == "ladder-commutator-block") {
      found = true;
      CHECK_FALSE(check.passed);
      CHECK(check.tolerance == -1.0);
    }
  CHECK(found);
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("a physically inconsistent config fails honestly") {
  RunConfig config = default_natural_config();
  config.modes[0].C2 = Complex{0.1, 0.1};  // not conj(C1): complex amplitude
  const VerifyReport report = run_verify(config);
  CHECK_FALSE(report.all_pass());
  for (const CheckResult& check : report.checks)
    if (check.check_name == "first-energy-conservation") {
      CHECK_FALSE(check.passed);
      CHECK_FALSE(check.note.empty());
    }
}

TEST_CASE("two-mode spectrum with a second-family constant still verifies") {
  RunConfig config = default_natural_config();
  json doc{{"L", std::numbers::pi},
           {"modes", json::array({json{{"alpha", 1}, {"C1", {0.5, 0.0}}},
                                  json{{"alpha", 3}, {"C1", {0.25, 0.1}}}})},
           {"grid", {{"n_points", 513}}},
           {"time", {{"t", 2.2}}},
           {"fock", {{"dim", 32}}}};
  const VerifyReport report = run_verify(parse_run_config(doc));
  for (const CheckResult& check : report.checks) {
    INFO(check.check_name, ": measured ", check.measured, " vs ", check.tolerance);
    CHECK(check.passed);
  }
}

TEST_CASE("jsonl rendering is line-oriented with the report keys") {
  const VerifyReport report = run_verify(default_natural_config());
  const std::string rendered = render_verify_jsonl(report);
  std::size_t lines = 0;
  std::size_t start = 0;
  while (start < rendered.size()) {
    const std::size_t end = rendered.find('\n', start);
    REQUIRE(end != std::string::npos);
    const json line = json::parse(rendered.substr(start, end - start));
    CHECK(line.contains("check_name"));
    CHECK(line.contains("status"));
    CHECK(line.contains("measured"));
    CHECK(line.contains("tolerance"));
    CHECK((line["status"] == "pass" || line["status"] == "fail"));
    ++lines;
    start = end + 1;
  }
  CHECK(lines == report.checks.size());
}
