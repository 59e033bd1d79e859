#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracwave/harness.hpp"

namespace fracwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failure or I/O trouble
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBlowUp = 3;

inline constexpr int kSchemaVersion = 1;

/// An experiment plus the run-level settings a config file may carry.
struct RunConfig {
  ExperimentSpec spec;
  std::filesystem::path out = "out";
  std::optional<double> dt;  // overrides spec.dt
  bool auto_dt = false;
  std::int64_t sample_every = 0;
  bool filter = false;
};

/// Strict parse: `schema_version` must equal kSchemaVersion and unknown keys
/// are rejected. ConfigError on any problem.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config for the experiment part, schema_version included.
nlohmann::json config_json(const RunConfig& config);

/// Entry point behind the `fracwave` executable; `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracwave::cli
