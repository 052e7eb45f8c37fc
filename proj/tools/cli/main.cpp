#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "runner.hpp"
#include "scenario.hpp"

namespace {

using hbl::cli::json;

const char* kDefaults = R"(Defaults:
  zeta_angles      [0]
  m_values         [0.05, 0.1, 0.2, 0.3]   (thm54: 0.05 .. 0.3 step 0.05, all < 1/pi)
  delta_schedule   [1e-1, 1e-2, ..., 1e-7]
  radii (blw)      1 - 10^(-1 - k/4), k = 0..12
  resolution       area 1024, thm54 512
  compact_margin   0.05
  approach         tangential-fan, samples 20
  tolerance        1e-7 (multiplicity)
  capacity ring    resolution 512, ray truncation_radius 1000
  thresholds       slope 1e-3, cauchy 1e-6, fit 1e-2, koebe_certificate 16 pi,
                   blw 1e-3, blw_stabilization 0.05, vanishing 1e-3
Exit codes: 0 success, 2 validation error, 3 numerical failure.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-behavior diagnostics for planar harmonic mappings"};
  app.footer(kDefaults);

  std::string command;
  std::string function;
  std::string config_path;
  std::string out_dir;
  bool reproducible = false;
  unsigned threads = 1;
  std::optional<double> alpha, zeta, m, s;
  std::optional<double> slope, cauchy, certificate, vanishing;

  std::string names;
  for (const auto& n : hbl::cli::command_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("command", command, "One of: " + names)->required();
  app.add_option("function", function, "Sub-function for capacity (tau2, gamma2, mu) or hyperbolic");
  app.add_option("--config", config_path, "Scenario JSON file");
  app.add_option("--out", out_dir, "Directory for <command>.json / <command>.csv");
  app.add_flag("--reproducible", reproducible, "Omit the wall-clock metadata field");
  app.add_option("--threads", threads, "Worker threads for independent cells")->check(CLI::Range(1u, 1024u));
  app.add_option("--alpha", alpha, "lm-scan shortcut: dilatation a(z) = alpha z");
  app.add_option("--zeta", zeta, "Boundary point angle (radians)");
  app.add_option("--m", m, "Single m value");
  app.add_option("--s", s, "Capacity argument");
  app.add_option("--slope", slope, "Divergence slope threshold");
  app.add_option("--cauchy", cauchy, "Convergence Cauchy tolerance");
  app.add_option("--certificate", certificate, "Koebe trend certificate (default 16 pi)");
  app.add_option("--vanishing-tolerance", vanishing, "Last-quartile bound for the vanishing criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hbl::cli::kExitValidation;
  }

  try {
    json doc;
    std::filesystem::path base = ".";
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw hbl::cli::ValidationError("", "cannot read config file " + config_path);
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw hbl::cli::ValidationError("", std::string("malformed JSON: ") + e.what());
      }
      const std::filesystem::path p(config_path);
      if (p.has_parent_path()) base = p.parent_path();
      if (doc.is_object() && doc.contains("command") && doc["command"] != command)
        throw hbl::cli::ValidationError("/command", "config is for " + doc["command"].dump() +
                                                         " but the command line asks for " + command);
    } else {
      doc = json::object();
    }
    if (!doc.is_object()) throw hbl::cli::ValidationError("", "expected an object");
    doc["command"] = command;

    // shortcut flags overlay the config document
    if (alpha) {
      std::ostringstream spec;
      spec.imbue(std::locale::classic());
      spec.precision(17);
      spec << "alpha_z:" << *alpha;
      doc["dilatation"] = spec.str();
      doc.erase("map");
    }
    if (zeta) doc["zeta_angles"] = json::array({*zeta});
    if (m) doc["m_values"] = json::array({*m});
    if (!function.empty()) {
      if (command == "capacity") {
        if (!doc.contains("capacity")) doc["capacity"] = json::object();
        doc["capacity"]["function"] = function;
      } else if (command == "hyperbolic") {
        if (!doc.contains("hyperbolic")) doc["hyperbolic"] = json::object();
        doc["hyperbolic"]["function"] = function;
      } else {
        throw hbl::cli::ValidationError("", "command " + command + " takes no function argument");
      }
    }
    if (s) {
      if (command != "capacity") throw hbl::cli::ValidationError("", "--s applies to the capacity command");
      if (!doc.contains("capacity")) doc["capacity"] = json::object();
      const std::string fn = doc["capacity"].value("function", std::string());
      doc["capacity"][fn == "mu" ? "r" : "s"] = *s;
    }
    auto threshold = [&](const char* key, const std::optional<double>& v) {
      if (!v) return;
      if (!doc.contains("thresholds")) doc["thresholds"] = json::object();
      doc["thresholds"][key] = *v;
    };
    threshold("slope", slope);
    threshold("cauchy", cauchy);
    threshold("koebe_certificate", certificate);
    threshold("vanishing", vanishing);

    const auto config = hbl::cli::parse_scenario_json(doc, base);
    hbl::cli::RunOptions options;
    if (!out_dir.empty()) options.out_dir = std::filesystem::path(out_dir);
    options.reproducible = reproducible;
    options.threads = threads;
    return hbl::cli::execute(config, options, std::cout, std::cerr);
  } catch (const hbl::cli::ValidationError& e) {
    std::cerr << "hbl: invalid scenario: " << e.what() << '\n';
    return hbl::cli::kExitValidation;
  }
}
