#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mfl/csv.hpp"
#include "mfl/iteration_map.hpp"
#include "mfl/reproduce.hpp"

namespace mfl::cli {

/// Exit codes shared by the library runner and the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;
inline constexpr int kExitGoldenMismatch = 4;

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::pair<std::string, csv::Table>> tables;
  nlohmann::json summary;
};

/// Validated, deterministic experiment run. Throws Error(config_invalid)
/// on schema problems and module errors otherwise.
///
/// config.kind selects the experiment: solve | accelerate | bound | game |
/// esc | satisfy | reproduce. See the README for the per-kind fields.
RunResult run_config(const nlohmann::json& config);

/// Writes each table as <out_dir>/<name>.csv plus <out_dir>/summary.json.
void write_outputs(const RunResult& result, const std::string& out_dir);

/// Map specification: {"expr": "...", "domain": [lo, hi]} or
/// {"builtin": "resource_sharing" | "beauty" | "chi_sqrt" |
///  "meanfield_sinr", ...params}.
IterationMap parse_map_spec(const nlohmann::json& spec);

} // namespace mfl::cli
