#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dea/pipeline.hpp"

namespace dea::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitSolverError = 2;

enum class OutputFormat { table, csv, json };

struct CliConfig {
  AnalysisMode mode = AnalysisMode::both;
  std::vector<std::string> dmus;  // empty: every DMU
  std::optional<double> big_m;    // nullopt: auto
  CandidatePolicy candidates = CandidatePolicy::support;
  FrontierCandidates frontier = FrontierCandidates::all_efficient;
  OutputFormat format = OutputFormat::table;
  ToleranceConfig tol;
  std::size_t node_limit = kDefaultNodeLimit;
};

/// `classify <dataset>`: one line per DMU with its efficiency status.
int cmd_classify(const std::string& path, std::ostream& out, std::ostream& err);

/// `analyze <dataset> [options]`: the report in the chosen format.
int cmd_analyze(const std::string& path, const CliConfig& config, std::ostream& out,
                std::ostream& err);

/// Parses `args` (without the program name) and dispatches. Returns the
/// process exit code: 0 success, 1 input error, 2 solver error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dea::cli
