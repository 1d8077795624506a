#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace bcube::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string command;
  std::string subcommand;                   // families only
  std::map<std::string, std::string> inputs;  // input, graph, graph_spec, x, y
  std::map<std::string, double> params;     // p, q, rho, r, k, n, ... as given on the command line
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
  std::optional<std::size_t> only_case;     // rerun a single case of a batch
  std::optional<std::string> suite;         // corpus-suite: run one named suite
};

struct RunResult {
  int exit_code = kOk;
  nlohmann::json report;
};

RunResult run_report(const RunConfig& config);

// Rerun every witness found in a saved report (or a single witness / list of witnesses).
RunResult replay(const nlohmann::json& saved);

std::string render_text(const nlohmann::json& report);

// The report without its wall_time field, for determinism comparisons.
nlohmann::json without_wall_time(nlohmann::json report);

}  // namespace bcube::cli
