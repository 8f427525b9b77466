#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numbers>

#include "cavityfield/config_io.hpp"

using namespace cavityfield;
using nlohmann::json;

namespace {

json base_doc() {
  return json{{"L", std::numbers::pi},
              {"V", 1.0},
              {"unit_system", "natural"},
              {"modes", json::array({json{{"alpha", 1}, {"C1", {0.5, 0.0}}}})},
              {"grid", {{"n_points", 129}}},
              {"time", {{"t", 0.0}, {"dt", 0.01}}},
              {"fock", {{"dim", 16}}}};
}

}  // namespace

TEST_CASE("full config document parses") {
  const RunConfig config = parse_run_config(base_doc());
  CHECK(config.cavity.L == std::numbers::pi);
  CHECK(config.cavity.units == UnitSystem::Natural);
  CHECK(config.modes.size() == 1);
  CHECK(config.modes[0].alpha.value == 1);
  CHECK(config.modes[0].C1 == Complex{0.5, 0.0});
  CHECK(config.grid.n_points == 129);
  CHECK(config.time.dt == 0.01);
  CHECK(config.fock.dim == 16);
  CHECK(config.output.format == OutputFormat::csv);
  CHECK(config.output.path.empty());
}

TEST_CASE("omitted constants default to natural-unit 1") {
  const RunConfig config = parse_run_config(json::object());
  CHECK(config.cavity.L == 1.0);
  CHECK(config.cavity.V == 1.0);
  CHECK(config.cavity.epsilon0 == 1.0);
  CHECK(config.cavity.mu0 == 1.0);
  CHECK(config.cavity.hbar == 1.0);
  CHECK(config.cavity.default_mass == 1.0);
  CHECK(config.modes.empty());
  CHECK(config.grid.n_points == 513);
  CHECK(config.fock.dim == 32);
}

TEST_CASE("omitted C2 makes the mode physical-real") {
  json doc = base_doc();
  doc["modes"][0]["C1"] = {0.3, 0.4};
  const RunConfig config = parse_run_config(doc);
  CHECK(config.modes[0].C2 == Complex{0.3, -0.4});
  CHECK(config.modes[0].physical_real());
}

TEST_CASE("mode constants parse") {
  json doc = base_doc();
  doc["modes"][0]["C2"] = {0.1, 0.2};
  doc["modes"][0]["C_prime"] = {-1.0, 0.5};
  doc["modes"][0]["C_const"] = 2.5;
  const RunConfig config = parse_run_config(doc);
  CHECK(config.modes[0].C2 == Complex{0.1, 0.2});
  CHECK(config.modes[0].C_prime == Complex{-1.0, 0.5});
  CHECK(config.modes[0].C_const == 2.5);
  CHECK_FALSE(config.modes[0].physical_real());
}

TEST_CASE("diagnostics name the offending key") {
  SUBCASE("fock.dim") {
    json doc = base_doc();
    doc["fock"]["dim"] = 1;
    CHECK_THROWS_WITH_AS(parse_run_config(doc), "fock.dim must be >= 2",
                         std::invalid_argument);
  }
  SUBCASE("modes[0].alpha") {
    json doc = base_doc();
    doc["modes"][0]["alpha"] = 0;
    CHECK_THROWS_WITH_AS(parse_run_config(doc),
                         doctest::Contains("modes[0].alpha"), std::invalid_argument);
  }
  SUBCASE("grid.n_points") {
    json doc = base_doc();
    doc["grid"]["n_points"] = 2;
    CHECK_THROWS_WITH_AS(parse_run_config(doc), doctest::Contains("grid.n_points"),
                         std::invalid_argument);
  }
  SUBCASE("natural units with scaled constants") {
    json doc = base_doc();
    doc["epsilon0"] = 2.0;
    CHECK_THROWS_WITH_AS(parse_run_config(doc), doctest::Contains("natural"),
                         std::invalid_argument);
  }
  SUBCASE("unknown keys are caught") {
    json doc = base_doc();
    doc["lenght"] = 1.0;
    CHECK_THROWS_WITH_AS(parse_run_config(doc), doctest::Contains("unknown key"),
                         std::invalid_argument);
  }
  SUBCASE("mode mass table must cover every configured mode") {
    json doc = base_doc();
    doc["mass"] = {1.0};
    doc["modes"].push_back(json{{"alpha", 2}, {"C1", {0.5, 0.0}}});
    CHECK_THROWS_WITH_AS(parse_run_config(doc), doctest::Contains("alpha=2"),
                         std::invalid_argument);
  }
  SUBCASE("output format tag") {
    json doc = base_doc();
    doc["output"] = {{"format", "xml"}};
    CHECK_THROWS_WITH_AS(parse_run_config(doc), doctest::Contains("output.format"),
                         std::invalid_argument);
  }
  SUBCASE("complex pairs must be [re, im]") {
    json doc = base_doc();
    doc["modes"][0]["C1"] = {1.0};
    CHECK_THROWS_WITH_AS(parse_run_config(doc), doctest::Contains("modes[0].C1"),
                         std::invalid_argument);
  }
  SUBCASE("duplicate mode indices") {
    json doc = base_doc();
    doc["modes"].push_back(json{{"alpha", 1}, {"C1", {0.1, 0.0}}});
    CHECK_THROWS_WITH_AS(parse_run_config(doc),
                         doctest::Contains("modes[1].alpha duplicates"),
                         std::invalid_argument);
  }
}

TEST_CASE("SI tag and per-mode masses") {
  json doc;
  doc["unit_system"] = "SI";
  doc["L"] = 0.01;
  doc["V"] = 1e-6;
  doc["epsilon0"] = 8.8541878128e-12;
  doc["mu0"] = 1.25663706212e-6;
  doc["hbar"] = 1.054571817e-34;
  doc["mass"] = {1e-3, 2e-3};
  doc["modes"] = json::array({json{{"alpha", 2}, {"C1", {1.0, 0.0}}}});
  const RunConfig config = parse_run_config(doc);
  CHECK(config.cavity.units == UnitSystem::SI);
  CHECK(config.cavity.mass(ModeIndex(2)) == 2e-3);
}

TEST_CASE("default time step tracks the slowest mode") {
  json doc = base_doc();
  doc["time"] = {{"t", 0.0}};
  const RunConfig config = parse_run_config(doc);
  // natural units, L = pi, alpha = 1: nu = 1, so T/512 = 2 pi / 512
  CHECK(config.dt_or_default() ==
        doctest::Approx(2.0 * std::numbers::pi / 512.0).epsilon(1e-15));
  json doc2 = base_doc();
  const RunConfig config2 = parse_run_config(doc2);
  CHECK(config2.dt_or_default() == 0.01);
}

TEST_CASE("file loading") {
  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(load_run_config("/nonexistent/cfg.json"),
                         doctest::Contains("cannot open"), std::invalid_argument);
  }
  SUBCASE("invalid JSON") {
    const std::string path = "bad_config_test.json";
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_WITH_AS(load_run_config(path), doctest::Contains("valid JSON"),
                         std::invalid_argument);
    std::remove(path.c_str());
  }
  SUBCASE("round trip through a file") {
    const std::string path = "good_config_test.json";
    std::ofstream(path) << base_doc().dump();
    const RunConfig config = load_run_config(path);
    CHECK(config.grid.n_points == 129);
    std::remove(path.c_str());
  }
}
