#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hbl/analytic_function.hpp"
#include "hbl/harmonic_map.hpp"
#include "hbl/koebe.hpp"

namespace hbl::cli {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// A config problem located by a JSON pointer into the scenario document.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string pointer, const std::string& message)
      : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

const std::vector<std::string>& command_names();

struct Thresholds {
  double slope = 1e-3;
  double cauchy = 1e-6;
  double fit = 1e-2;
  double koebe_certificate = 16.0 * kPi;
  double blw = 1e-3;
  double blw_stabilization = 0.05;
  double vanishing = 1e-3;
};

struct OutputSpec {
  std::string format = "json";  // json | csv (csv also writes the json document)
  std::optional<std::filesystem::path> path;
};

struct ScenarioConfig {
  std::string command;
  json source;                        // the document as given
  std::optional<HarmonicMap> map;
  std::optional<AnalyticFunction> dilatation;
  std::vector<double> zeta_angles{0.0};
  std::vector<double> m_values{0.05, 0.1, 0.2, 0.3};
  std::vector<double> delta_schedule;
  std::vector<double> radii;
  std::vector<Complex> points;
  int resolution = 0;                 // area: 1024, thm54: 512
  double compact_margin = 0.05;
  std::string approach = "tangential-fan";
  int samples = 20;
  double tolerance = 1e-7;
  std::optional<std::filesystem::path> sequences;
  std::vector<KoebeSequenceItem> koebe_items;
  std::optional<ZeroSequence> zeros;
  json capacity;                      // validated sub-document
  json hyperbolic;                    // validated sub-document
  OutputSpec output;
  Thresholds thresholds;
};

// Reads and validates a scenario file. Sequence files resolve against its
// directory, the output path against the working directory.
ScenarioConfig parse_scenario(const std::filesystem::path& path);

// Validates an in-memory document. base_dir anchors relative file references.
ScenarioConfig parse_scenario_json(const json& doc, const std::filesystem::path& base_dir);

// Function shorthands: "alpha_z:<a>", "identity", "zero"; or a tagged object.
AnalyticFunction parse_function(const json& spec, const std::string& pointer);
Complex parse_complex(const json& v, const std::string& pointer);

}  // namespace hbl::cli
