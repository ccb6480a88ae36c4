#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "CLI11.hpp"
#include "dea/error.hpp"
#include "report_io.hpp"

namespace dea::cli {

int cmd_classify(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const auto ds = load_dataset_file(path);
    write_classification(out, ds, classify_all(ds));
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolverError;
  }
}

int cmd_analyze(const std::string& path, const CliConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    const auto ds = load_dataset_file(path);
    std::vector<std::size_t> selection;
    for (const auto& name : config.dmus) selection.push_back(ds.index_of(name));

    AnalysisConfig analysis;
    analysis.mode = config.mode;
    analysis.big_m = config.big_m;
    analysis.candidates = config.candidates;
    analysis.frontier = config.frontier;
    analysis.tol = config.tol;
    analysis.node_limit = config.node_limit;
    const auto report = analyze_all(ds, analysis, selection);

    switch (config.format) {
      case OutputFormat::json: out << report_to_json(ds, report).dump(2) << '\n'; break;
      case OutputFormat::csv: write_report_csv(out, ds, report); break;
      case OutputFormat::table: write_report_table(out, ds, report); break;
    }
    for (const auto& rec : report.records) {
      if (!rec.error) continue;
      err << "error: " << ds.name(rec.dmu) << ": "
          << (rec.error->stage.empty() ? "" : rec.error->stage + ": ") << rec.error->message
          << '\n';
    }
    return report.has_errors() ? kExitSolverError : kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolverError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closest Pareto-efficient targets and maximal reference sets for DEA", "dea"};
  app.require_subcommand(1);

  std::string path;
  auto* classify = app.add_subcommand("classify", "Classify every DMU as extreme-efficient, "
                                                  "efficient or inefficient");
  classify->add_option("dataset", path, "CSV dataset")->required();

  CliConfig config;
  std::string big_m = "auto";
  auto* analyze = app.add_subcommand("analyze", "Furthest and closest projections with their "
                                                "maximal reference sets");
  analyze->add_option("dataset", path, "CSV dataset")->required();
  analyze->add_option("--mode", config.mode, "closest, furthest or both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, AnalysisMode>{{"closest", AnalysisMode::closest},
                                              {"furthest", AnalysisMode::furthest},
                                              {"both", AnalysisMode::both}},
          CLI::ignore_case))
      ->option_text("closest|furthest|both");
  analyze->add_option("--dmu", config.dmus, "Only analyse these DMUs (repeatable or comma list)")
      ->delimiter(',');
  analyze->add_option("--big-m", big_m, "Big-M constant, or 'auto' for 1e5 x max |data|")
      ->option_text("M|auto");
  analyze->add_option("--candidates", config.candidates,
                      "Reference-set candidates: support or all-efficient")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, CandidatePolicy>{{"support", CandidatePolicy::support},
                                                 {"all-efficient", CandidatePolicy::all_efficient}},
          CLI::ignore_case))
      ->option_text("support|all-efficient");
  analyze->add_option("--frontier", config.frontier,
                      "Projection candidates: all-efficient or extreme")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, FrontierCandidates>{
              {"all-efficient", FrontierCandidates::all_efficient},
              {"extreme", FrontierCandidates::extreme_only}},
          CLI::ignore_case))
      ->option_text("all-efficient|extreme");
  analyze->add_option("--format", config.format, "table, csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"table", OutputFormat::table},
                                              {"csv", OutputFormat::csv},
                                              {"json", OutputFormat::json}},
          CLI::ignore_case))
      ->option_text("table|csv|json");
  analyze->add_option("--pivot-tol", config.tol.pivot, "Smallest usable pivot (default 1e-9)")->check(CLI::PositiveNumber);
  analyze->add_option("--feasibility-tol", config.tol.feasibility, "Relative feasibility tolerance (default 1e-7)")->check(CLI::PositiveNumber);
  analyze->add_option("--optimality-tol", config.tol.optimality, "Reduced-cost tolerance (default 1e-9)")->check(CLI::PositiveNumber);
  analyze->add_option("--integrality-tol", config.tol.integrality, "Binary integrality tolerance (default 1e-6)")->check(CLI::PositiveNumber);
  analyze->add_option("--max-iterations", config.tol.max_iterations, "Simplex pivots per LP (default 50000)")->check(CLI::PositiveNumber);
  analyze->add_option("--node-limit", config.node_limit, "Branch-and-bound nodes per DMU (default 100000)")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"dea"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  if (classify->parsed()) return cmd_classify(path, out, err);

  if (big_m != "auto") {
    double value = 0.0;
    const auto* end = big_m.data() + big_m.size();
    const auto [ptr, ec] = std::from_chars(big_m.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value) || value <= 0.0) {
      err << "error: --big-m expects a positive number or 'auto', got '" << big_m << "'\n";
      return kExitInputError;
    }
    config.big_m = value;
  }
  return cmd_analyze(path, config, out, err);
}

}  // namespace dea::cli
