#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "scenario.hpp"

namespace hbl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct RunOptions {
  std::optional<std::filesystem::path> out_dir;  // overrides output.path
  bool reproducible = false;                     // drop the wall-clock metadata field
  unsigned threads = 1;
};

struct RunOutput {
  json document;
  std::string csv;  // header + rows, always produced
};

// Runs the scenario; library errors propagate.
RunOutput run(const ScenarioConfig& config, const RunOptions& options);

// Runs and writes artifacts (<dir>/<command>.json and, for csv output,
// <dir>/<command>.csv) or prints the JSON document to `out` when no
// directory is configured. Errors go to `err`; returns the exit code.
int execute(const ScenarioConfig& config, const RunOptions& options, std::ostream& out,
            std::ostream& err);

// Shortest round-trip decimal form; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double x);

}  // namespace hbl::cli
