#include "doctest.h"

#include "runner.hpp"
#include "scenario.hpp"

#include "hbl/boundary_diagnostics.hpp"
#include "hbl/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hbl;
using hbl::cli::json;
using hbl::cli::ValidationError;

namespace {

std::string pointer_of(const json& doc) {
  try {
    hbl::cli::parse_scenario_json(doc, ".");
  } catch (const ValidationError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

std::vector<std::string> csv_lines(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("minimal lm-scan config gets the documented defaults") {
  const auto c = hbl::cli::parse_scenario_json(
      json{{"command", "lm-scan"}, {"dilatation", "alpha_z:0.5"}, {"zeta_angles", {0}}}, ".");
  CHECK(c.command == "lm-scan");
  CHECK(c.m_values == std::vector<double>{0.05, 0.1, 0.2, 0.3});
  REQUIRE(c.delta_schedule.size() == 7);
  CHECK(c.delta_schedule.front() == doctest::Approx(1e-1));
  CHECK(c.delta_schedule.back() == doctest::Approx(1e-7));
  REQUIRE(c.dilatation);
  CHECK(std::abs((*c.dilatation)(0.4) - 0.2) < 1e-15);
  CHECK(c.output.format == "json");
}

TEST_CASE("validation errors carry JSON pointers") {
  json thm = {{"command", "thm54"}, {"map", {{"regular_polygon", 3}}}, {"zeta_angles", {3.14}},
              {"m_values", {0.1, 0.5}}};
  CHECK(pointer_of(thm) == "/m_values/1");
  CHECK(pointer_of(json{{"command", "area"}, {"map", {{"regular_polygon", 3}}}, {"colour", 1}}) == "/colour");
  CHECK(pointer_of(json{{"command", "fly"}}) == "/command");
  CHECK(pointer_of(json{{"command", "lm-scan"}, {"dilatation", "alpha_z:0.5"}, {"m_values", {0.2, -1}}}) ==
        "/m_values/1");
  CHECK(pointer_of(json{{"command", "lm-scan"}}) != "<accepted>");
  CHECK(pointer_of(json{{"command", "koebe"}, {"sequences", "does/not/exist.json"}}) == "/sequences");
  CHECK(pointer_of(json{{"command", "capacity"}, {"capacity", {{"function", "tau2"}, {"s", -1}}}}) ==
        "/capacity/s");
  CHECK(pointer_of(json{{"command", "area"},
                        {"map", {{"step", {{"jumps", {0, 1}}, {"values", {{1, 0}, {1, 0}}}}}}}}) ==
        "/map/step");
}

TEST_CASE("step-map config with unit-root values is the triangle map") {
  const double pi = kPi;
  json values = json::array();
  for (int k = 0; k < 3; ++k) values.push_back({std::cos(2 * pi * k / 3), std::sin(2 * pi * k / 3)});
  const auto c = hbl::cli::parse_scenario_json(
      json{{"command", "area"}, {"map", {{"step", {{"jumps", {0, 2 * pi / 3, 4 * pi / 3}}, {"values", values}}}}}},
      ".");
  REQUIRE(c.map);
  const auto ref = poisson_step_map(StepBoundaryFunction::regular_polygon(3));
  for (Complex z : {Complex{0.1, 0.2}, Complex{-0.5, 0.3}, Complex{0.0, -0.9}})
    CHECK(std::abs(eval_map(*c.map, z) - eval_map(ref, z)) < 1e-14);
  CHECK(std::abs(std::abs(partials(*c.map, 0.0).h_prime) - 3 * std::sqrt(3.0) / (2 * pi)) < 1e-6);
}

TEST_CASE("function forms") {
  const auto p = hbl::cli::parse_function(json{{"polynomial", {{1, 0}, {0, 1}}}}, "/f");
  CHECK(std::abs(p(2.0) - Complex(1, 2)) < 1e-15);
  CHECK(std::abs(hbl::cli::parse_function("identity", "/f")(0.3) - 0.3) < 1e-15);
  CHECK(std::abs(hbl::cli::parse_function("alpha_z:0.5,0.5", "/f")(1.0) - Complex(0.5, 0.5)) < 1e-15);
  CHECK_THROWS_AS(hbl::cli::parse_function("alpha_z:x", "/f"), ValidationError);
  CHECK_THROWS_AS(hbl::cli::parse_function(json{{"nope", 1}}, "/f"), ValidationError);
  CHECK(hbl::cli::parse_complex(json{1.5, -2}, "/c") == Complex(1.5, -2));
  CHECK(hbl::cli::parse_complex(json(2.0), "/c") == Complex(2.0, 0.0));
}

TEST_CASE("capacity tau2 at 1 is 8") {
  const auto c = hbl::cli::parse_scenario_json(
      json{{"command", "capacity"}, {"capacity", {{"function", "tau2"}, {"s", 1}}}}, ".");
  hbl::cli::RunOptions opt;
  opt.reproducible = true;
  const auto out = hbl::cli::run(c, opt);
  CHECK(out.document["result"]["value"].get<double>() == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(out.document["schema_version"] == hbl::cli::kSchemaVersion);
  CHECK_FALSE(out.document["metadata"].contains("generated_at"));
  // round trip
  CHECK(json::parse(out.document.dump()) == out.document);
}

TEST_CASE("lm-scan on alpha z = 0.5 z") {
  const auto c = hbl::cli::parse_scenario_json(
      json{{"command", "lm-scan"}, {"dilatation", "alpha_z:0.5"}, {"m_values", {0.2}}}, ".");
  hbl::cli::RunOptions opt;
  opt.reproducible = true;
  const auto out = hbl::cli::run(c, opt);
  const auto lines = csv_lines(out.csv);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "schema_version,zeta_angle,m,delta,value,verdict");
  double prev = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i]);
    REQUIRE(f.size() == 6);
    CHECK(f[0] == "1");
    CHECK(f[5] == "divergent");
    const double v = std::stod(f[4]);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(out.document["result"]["cells"][0]["verdict"] == to_string(DivergenceClass::divergent));
}

TEST_CASE("numbers are written in shortest round-trip form") {
  CHECK(hbl::cli::format_double(0.1) == "0.1");
  CHECK(hbl::cli::format_double(8.0) == "8");
  CHECK(hbl::cli::format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(hbl::cli::format_double(std::nan("")) == "nan");
  const double x = 2.0 / 3.0;
  CHECK(std::stod(hbl::cli::format_double(x)) == x);
}

TEST_CASE("exit codes") {
  hbl::cli::RunOptions opt;
  opt.reproducible = true;
  std::ostringstream out, err;
  const auto good = hbl::cli::parse_scenario_json(
      json{{"command", "hyperbolic"}, {"hyperbolic", {{"function", "dist_halfplane"}, {"z1", {0, 1}}, {"z2", {0, 2}}}}},
      ".");
  CHECK(hbl::cli::execute(good, opt, out, err) == hbl::cli::kExitOk);
  CHECK(json::parse(out.str())["result"]["distance"].get<double>() == doctest::Approx(std::log(2.0)));

  // a locally constant map has no resolvable multiplicity
  const auto flat = hbl::cli::parse_scenario_json(
      json{{"command", "multiplicity"}, {"map", {{"h", "zero"}, {"g", "zero"}}}, {"points", {{0, 0}}}}, ".");
  std::ostringstream out2, err2;
  CHECK(hbl::cli::execute(flat, opt, out2, err2) == hbl::cli::kExitNumerical);
  CHECK(err2.str().find("locally constant") != std::string::npos);
}

}
