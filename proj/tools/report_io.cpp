#include "report_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace dea::cli {
namespace {

using nlohmann::ordered_json;

std::string_view mode_name(AnalysisMode m) {
  switch (m) {
    case AnalysisMode::closest: return "closest";
    case AnalysisMode::furthest: return "furthest";
    case AnalysisMode::both: return "both";
  }
  return "both";
}

std::vector<double> flatten(const Activity& a) {
  std::vector<double> out = a.inputs;
  out.insert(out.end(), a.outputs.begin(), a.outputs.end());
  return out;
}

std::vector<std::string> names_of(const DMUDataset& ds, const IndexSet& set) {
  std::vector<std::string> out;
  for (auto j : set) out.push_back(ds.name(j));
  return out;
}

ordered_json weights_of(const DMUDataset& ds, const std::map<std::size_t, double>& w) {
  ordered_json out = ordered_json::object();
  for (const auto& [j, v] : w) out[ds.name(j)] = v;
  return out;
}

std::string exact(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::string short_number(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

std::string short_point(const Activity& a) {
  std::string out = "(";
  const auto flat = flatten(a);
  for (std::size_t k = 0; k < flat.size(); ++k) {
    if (k) out += ", ";
    out += short_number(flat[k]);
  }
  return out + ")";
}

std::string braced(const DMUDataset& ds, const IndexSet& set) {
  std::string out = "{";
  bool first = true;
  for (auto j : set) {
    out += (first ? "" : ",") + ds.name(j);
    first = false;
  }
  return out + "}";
}

std::string joined(const DMUDataset& ds, const IndexSet& set) {
  std::string out;
  for (auto j : set) {
    if (!out.empty()) out += ';';
    out += ds.name(j);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string error_text(const RecordError& e) {
  return e.stage.empty() ? e.message : e.stage + ": " + e.message;
}

}  // namespace

ordered_json report_to_json(const DMUDataset& ds, const AnalysisReport& report) {
  const auto& cfg = report.config;
  ordered_json config = {
      {"mode", mode_name(cfg.mode)},
      {"big_m", report.big_m},
      {"big_m_source", cfg.big_m ? "user" : "auto"},
      {"candidates", cfg.candidates == CandidatePolicy::support ? "support" : "all-efficient"},
      {"frontier", cfg.frontier == FrontierCandidates::all_efficient ? "all-efficient" : "extreme"},
      {"tolerances",
       {{"pivot", cfg.tol.pivot},
        {"feasibility", cfg.tol.feasibility},
        {"optimality", cfg.tol.optimality},
        {"integrality", cfg.tol.integrality},
        {"max_iterations", cfg.tol.max_iterations}}},
      {"node_limit", cfg.node_limit},
  };

  ordered_json dmus = ordered_json::array();
  for (const auto& rec : report.records) {
    ordered_json d = {{"name", ds.name(rec.dmu)}, {"status", to_string(rec.status)}};
    if (rec.furthest) {
      const auto& f = *rec.furthest;
      d["furthest"] = {
          {"point", flatten(f.projection.point)},
          {"objective", f.projection.objective},
          {"maximal_frs", names_of(ds, f.maximal_set.members)},
      };
    }
    if (rec.closest) {
      const auto& c = *rec.closest;
      const auto& h = c.maximal_set.hyperplane;
      d["closest"] = {
          {"point", flatten(c.projection.point)},
          {"objective", c.projection.objective},
          {"support", names_of(ds, c.support)},
          {"mcrs", names_of(ds, c.maximal_set.members)},
          {"mu", weights_of(ds, c.maximal_set.mu)},
          {"eta", c.maximal_set.eta},
          {"hyperplane", {{"u", h.u}, {"v", h.v}}},
          {"nodes", c.projection.nodes},
      };
    }
    if (rec.error) d["error"] = error_text(*rec.error);
    dmus.push_back(std::move(d));
  }

  ordered_json notes = ordered_json::array();
  for (const auto& n : report.notes) notes.push_back(n.text);

  return ordered_json{
      {"config", std::move(config)},
      {"dataset",
       {{"digest", report.dataset_digest},
        {"inputs", ds.input_labels()},
        {"outputs", ds.output_labels()},
        {"dmus", ds.num_dmus()}}},
      {"dmus", std::move(dmus)},
      {"notes", std::move(notes)},
  };
}

void write_report_csv(std::ostream& out, const DMUDataset& ds, const AnalysisReport& report) {
  std::vector<std::string> point_labels;
  for (const auto& l : ds.input_labels()) point_labels.push_back("in:" + l);
  for (const auto& l : ds.output_labels()) point_labels.push_back("out:" + l);

  out << "dmu,status,furthest_objective";
  for (const auto& l : point_labels) out << ',' << csv_field("furthest:" + l);
  out << ",maximal_frs,closest_objective";
  for (const auto& l : point_labels) out << ',' << csv_field("closest:" + l);
  out << ",support,mcrs,eta,error\n";

  for (const auto& rec : report.records) {
    out << csv_field(ds.name(rec.dmu)) << ',' << to_string(rec.status) << ',';
    if (rec.furthest) {
      const auto& f = *rec.furthest;
      out << exact(f.projection.objective);
      for (double v : flatten(f.projection.point)) out << ',' << exact(v);
      out << ',' << csv_field(joined(ds, f.maximal_set.members));
    } else {
      out << std::string(point_labels.size() + 1, ',');
    }
    out << ',';
    if (rec.closest) {
      const auto& c = *rec.closest;
      out << exact(c.projection.objective);
      for (double v : flatten(c.projection.point)) out << ',' << exact(v);
      out << ',' << csv_field(joined(ds, c.support)) << ','
          << csv_field(joined(ds, c.maximal_set.members)) << ',' << exact(c.maximal_set.eta);
    } else {
      out << std::string(point_labels.size() + 3, ',');
    }
    out << ',' << (rec.error ? csv_field(error_text(*rec.error)) : "") << '\n';
  }
}

void write_report_table(std::ostream& out, const DMUDataset& ds, const AnalysisReport& report) {
  const bool furthest = report.config.mode != AnalysisMode::closest;
  const bool closest = report.config.mode != AnalysisMode::furthest;

  std::vector<std::string> header{"DMU", "status"};
  if (furthest) {
    header.insert(header.end(), {"furthest point", "slack sum", "maximal FRS"});
  }
  if (closest) {
    header.insert(header.end(), {"closest point", "slack sum", "MCRS", "eta"});
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> errors;
  for (const auto& rec : report.records) {
    std::string name = ds.name(rec.dmu);
    for (std::size_t k = 0; k < report.notes.size(); ++k) {
      if (report.notes[k].dmu == rec.dmu) name += " [" + std::to_string(k + 1) + "]";
    }
    std::vector<std::string> row{name, std::string(to_string(rec.status))};
    if (furthest) {
      if (rec.furthest) {
        const auto& f = *rec.furthest;
        row.insert(row.end(), {short_point(f.projection.point), short_number(f.projection.objective),
                               braced(ds, f.maximal_set.members)});
      } else {
        row.insert(row.end(), 3, "-");
      }
    }
    if (closest) {
      if (rec.closest) {
        const auto& c = *rec.closest;
        row.insert(row.end(), {short_point(c.projection.point), short_number(c.projection.objective),
                               braced(ds, c.maximal_set.members), short_number(c.maximal_set.eta)});
      } else {
        row.insert(row.end(), 4, "-");
      }
    }
    if (rec.error) errors.push_back(ds.name(rec.dmu) + ": " + error_text(*rec.error));
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (auto w : width) total += w + 2;
  out << std::string(total - 2, '-') << '\n';
  for (const auto& row : rows) emit(row);

  for (std::size_t k = 0; k < report.notes.size(); ++k) {
    out << "\n[" << k + 1 << "] " << report.notes[k].text << '\n';
  }
  if (!errors.empty()) {
    out << "\nerrors:\n";
    for (const auto& e : errors) out << "  " << e << '\n';
  }
}

void write_classification(std::ostream& out, const DMUDataset& ds, const Classification& cls) {
  std::size_t width = 0;
  for (const auto& n : ds.names()) width = std::max(width, n.size());
  for (std::size_t j = 0; j < ds.num_dmus(); ++j) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << ds.name(j)
        << to_string(cls.status[j]) << '\n';
  }
}

}  // namespace dea::cli
