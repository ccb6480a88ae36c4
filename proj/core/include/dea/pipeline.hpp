#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/milp.hpp"
#include "dea/models.hpp"
#include "dea/tolerance.hpp"

namespace dea {

enum class AnalysisMode { closest, furthest, both };

/// Which DMUs the reference-set LP may draw on for the closest projection.
enum class CandidatePolicy {
  support,        // DMUs on the hyperplane found by the closest-projection MILP
  all_efficient,  // every efficient DMU
};

/// Which DMUs the closest-projection MILP may project onto.
enum class FrontierCandidates { all_efficient, extreme_only };

struct AnalysisConfig {
  AnalysisMode mode = AnalysisMode::both;
  /// nullopt selects default_big_m(ds).
  std::optional<double> big_m;
  CandidatePolicy candidates = CandidatePolicy::support;
  FrontierCandidates frontier = FrontierCandidates::all_efficient;
  ToleranceConfig tol;
  std::size_t node_limit = kDefaultNodeLimit;
};

enum class ErrorKind { input, solver };

struct RecordError {
  ErrorKind kind = ErrorKind::solver;
  /// Stage that failed, e.g. "closest projection".
  std::string stage;
  std::string message;
};

struct FurthestRecord {
  ProjectionResult projection;
  ReferenceSetResult maximal_set;
};

struct ClosestRecord {
  ProjectionResult projection;
  IndexSet support;
  ReferenceSetResult maximal_set;
};

struct AnalysisRecord {
  std::size_t dmu = 0;
  EfficiencyStatus status = EfficiencyStatus::inefficient;
  std::optional<FurthestRecord> furthest;
  std::optional<ClosestRecord> closest;
  std::optional<RecordError> error;
};

struct ReportNote {
  /// DMU the note refers to, if any.
  std::optional<std::size_t> dmu;
  std::string text;
};

struct AnalysisReport {
  /// FNV-1a hash of the dataset's canonical CSV form, as 16 hex digits.
  std::string dataset_digest;
  AnalysisConfig config;
  /// The big-M actually used (config.big_m or the automatic default).
  double big_m = 0.0;
  std::vector<AnalysisRecord> records;
  /// Remarks about known discrepancies on recognised benchmark data.
  std::vector<ReportNote> notes;

  bool has_errors() const;
};

/// Step 1 (closest projection and its support set) followed by step 2
/// (maximal reference set), plus the furthest projection when requested.
/// Errors are rethrown with the failing stage prefixed.
AnalysisRecord analyze_dmu(const DMUDataset& ds, std::size_t o, const AnalysisConfig& config);
AnalysisRecord analyze_dmu(const DMUDataset& ds, std::size_t o,
                           const Classification& classification, const AnalysisConfig& config);

/// Analyses `selection` (every DMU when empty) in dataset order. A failure
/// in one record is stored in that record and does not stop the batch.
AnalysisReport analyze_all(const DMUDataset& ds, const AnalysisConfig& config,
                           const std::vector<std::size_t>& selection = {});

std::string dataset_digest(const DMUDataset& ds);

}  // namespace dea
