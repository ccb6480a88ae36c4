#include "dea/pipeline.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "dea/error.hpp"
#include "dea/fixtures.hpp"

namespace dea {
namespace {

IndexSet frontier_candidates(const Classification& cls, FrontierCandidates policy) {
  return policy == FrontierCandidates::extreme_only ? cls.extreme_efficient() : cls.efficient();
}

// Runs every stage of one record; `stage` names the stage in progress so the
// caller can attribute a failure.
AnalysisRecord evaluate(const DMUDataset& ds, std::size_t o, const Classification& cls,
                        const AnalysisConfig& config, std::string& stage) {
  AnalysisRecord rec;
  rec.dmu = o;
  rec.status = cls.status.at(o);
  const IndexSet efficient = cls.efficient();

  if (config.mode != AnalysisMode::closest) {
    stage = "furthest projection";
    FurthestRecord f;
    f.projection = solve_additive(ds, o, config.tol);
    stage = "maximal furthest reference set";
    f.maximal_set = solve_mcrs(ds, f.projection, efficient, config.tol);
    rec.furthest = std::move(f);
  }

  if (config.mode != AnalysisMode::furthest) {
    stage = "closest projection";
    const double big_m = config.big_m.value_or(default_big_m(ds));
    const IndexSet frontier = frontier_candidates(cls, config.frontier);
    ClosestRecord c;
    c.projection = solve_madd(ds, o, frontier, big_m, config.tol, config.node_limit);
    c.support = support_set(ds, c.projection, frontier);
    stage = "maximal closest reference set";
    const IndexSet& pool = config.candidates == CandidatePolicy::support ? c.support : efficient;
    c.maximal_set = solve_mcrs(ds, c.projection, pool, config.tol);
    rec.closest = std::move(c);
  }
  stage.clear();
  return rec;
}

std::string staged(const std::string& stage, const char* what) {
  return stage.empty() ? std::string(what) : stage + ": " + what;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string format_point(const Activity& a) {
  std::string out = "(";
  for (double v : a.inputs) out += format_value(v) + ", ";
  for (std::size_t r = 0; r < a.outputs.size(); ++r) {
    out += format_value(a.outputs[r]);
    out += r + 1 < a.outputs.size() ? ", " : ")";
  }
  return out;
}

// Known divergence on the nine-DMU benchmark: the frequently quoted closest
// target for DMU7 is a frontier point but not the minimum-distance one.
void annotate_benchmark(const DMUDataset& ds, AnalysisReport& report) {
  if (!fixtures::is_nine_dmu_example(ds)) return;
  constexpr std::size_t kDmu7 = 6;
  for (const auto& rec : report.records) {
    if (rec.dmu != kDmu7 || !rec.closest) continue;
    const auto& p = rec.closest->projection;
    report.notes.push_back(ReportNote{
        kDmu7,
        ds.name(kDmu7) + ": closest target " + format_point(p.point) + " with slack sum " +
        format_value(p.objective) +
        " differs from the frequently quoted target (7, 2.3333, 1.1667) with slack sum "
        "1.8333; the quoted point lies on the frontier but is not the minimum-distance "
        "target."});
  }
}

}  // namespace

bool AnalysisReport::has_errors() const {
  for (const auto& r : records)
    if (r.error) return true;
  return false;
}

std::string dataset_digest(const DMUDataset& ds) {
  std::ostringstream canonical;
  write_dataset(canonical, ds);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical.str()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AnalysisRecord analyze_dmu(const DMUDataset& ds, std::size_t o, const AnalysisConfig& config) {
  return analyze_dmu(ds, o, classify_all(ds, config.tol), config);
}

AnalysisRecord analyze_dmu(const DMUDataset& ds, std::size_t o,
                           const Classification& classification, const AnalysisConfig& config) {
  if (o >= ds.num_dmus()) throw InputError("DMU index out of range");
  std::string stage;
  try {
    return evaluate(ds, o, classification, config, stage);
  } catch (const SaturationError& e) {
    throw SaturationError(staged(stage, e.what()));
  } catch (const NodeLimitError& e) {
    throw NodeLimitError(staged(stage, e.what()));
  } catch (const IterationLimitError& e) {
    throw IterationLimitError(staged(stage, e.what()));
  } catch (const PreconditionError& e) {
    throw PreconditionError(staged(stage, e.what()));
  } catch (const SolverError& e) {
    throw SolverError(staged(stage, e.what()));
  } catch (const InputError& e) {
    throw InputError(staged(stage, e.what()));
  }
}

AnalysisReport analyze_all(const DMUDataset& ds, const AnalysisConfig& config,
                           const std::vector<std::size_t>& selection) {
  AnalysisReport report;
  report.dataset_digest = dataset_digest(ds);
  report.config = config;
  report.big_m = config.big_m.value_or(default_big_m(ds));

  std::vector<std::size_t> order = selection;
  if (order.empty()) {
    for (std::size_t j = 0; j < ds.num_dmus(); ++j) order.push_back(j);
  }
  for (auto o : order) {
    if (o >= ds.num_dmus()) throw InputError("DMU index out of range");
  }

  const Classification cls = classify_all(ds, config.tol);
  for (auto o : order) {
    std::string stage;
    try {
      report.records.push_back(evaluate(ds, o, cls, config, stage));
    } catch (const InputError& e) {
      AnalysisRecord rec;
      rec.dmu = o;
      rec.status = cls.status[o];
      rec.error = RecordError{ErrorKind::input, stage, e.what()};
      report.records.push_back(std::move(rec));
    } catch (const Error& e) {
      AnalysisRecord rec;
      rec.dmu = o;
      rec.status = cls.status[o];
      rec.error = RecordError{ErrorKind::solver, stage, e.what()};
      report.records.push_back(std::move(rec));
    }
  }
  annotate_benchmark(ds, report);
  return report;
}

}  // namespace dea
