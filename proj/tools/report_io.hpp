#pragma once

#include <ostream>

#include "dea/dataset.hpp"
#include "dea/models.hpp"
#include "dea/pipeline.hpp"
#include "json.hpp"

namespace dea::cli {

/// JSON form of a report. Numbers keep full double precision; DMUs are
/// referred to by name.
nlohmann::ordered_json report_to_json(const DMUDataset& ds, const AnalysisReport& report);

/// One row per DMU; sets are `;`-joined names, numbers round-trip exactly.
void write_report_csv(std::ostream& out, const DMUDataset& ds, const AnalysisReport& report);

/// Aligned human-readable table with 6 significant digits.
void write_report_table(std::ostream& out, const DMUDataset& ds, const AnalysisReport& report);

void write_classification(std::ostream& out, const DMUDataset& ds, const Classification& cls);

}  // namespace dea::cli
