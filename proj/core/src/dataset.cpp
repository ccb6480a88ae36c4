#include "dea/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "dea/error.hpp"

namespace dea {
namespace {

constexpr std::string_view kInputPrefix = "in:";
constexpr std::string_view kOutputPrefix = "out:";

std::string at_line(std::size_t line) {
  return "row " + std::to_string(line);
}

// Splits one CSV record. Double-quoted fields may contain commas and
// doubled quotes; embedded newlines are not supported.
std::vector<std::string> split_record(std::string_view text, std::size_t line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool field_was_quoted = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          current.push_back('"');
          ++k;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      if (!current.empty() || field_was_quoted) {
        throw InputError("malformed CSV at " + at_line(line) +
                         ": stray quote inside field " +
                         std::to_string(fields.size() + 1));
      }
      quoted = true;
      field_was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
      field_was_quoted = false;
    } else {
      if (field_was_quoted) {
        throw InputError("malformed CSV at " + at_line(line) +
                         ": text after closing quote in field " +
                         std::to_string(fields.size() + 1));
      }
      current.push_back(c);
    }
  }
  if (quoted) {
    throw InputError("malformed CSV at " + at_line(line) +
                     ": unterminated quoted field");
  }
  fields.push_back(std::move(current));
  return fields;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view cell, std::size_t line,
                    const std::string& column) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (cell.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw InputError("non-numeric value '" + std::string(cell) + "' at " +
                     at_line(line) + ", column " + column);
  }
  return value;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

}  // namespace

DMUDataset::DMUDataset(std::vector<std::string> names,
                       std::vector<std::string> input_labels,
                       std::vector<std::string> output_labels,
                       std::vector<std::vector<double>> inputs,
                       std::vector<std::vector<double>> outputs)
    : names_(std::move(names)),
      input_labels_(std::move(input_labels)),
      output_labels_(std::move(output_labels)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("dataset has no DMUs");
  if (input_labels_.empty()) throw InputError("dataset has no inputs");
  if (output_labels_.empty()) throw InputError("dataset has no outputs");
  if (inputs_.size() != input_labels_.size() ||
      outputs_.size() != output_labels_.size()) {
    throw InputError("matrix row count does not match label count");
  }
  for (const auto& row : inputs_) {
    if (row.size() != n) throw InputError("input row length differs from DMU count");
  }
  for (const auto& row : outputs_) {
    if (row.size() != n) throw InputError("output row length differs from DMU count");
  }
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) throw InputError("duplicate DMU name '" + name + "'");
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool positive_input = false;
    bool positive_output = false;
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      const double v = inputs_[i][j];
      if (!std::isfinite(v) || v < 0.0) {
        throw InputError("invalid value for DMU '" + names_[j] + "', input " +
                         input_labels_[i]);
      }
      positive_input = positive_input || v > 0.0;
    }
    for (std::size_t r = 0; r < outputs_.size(); ++r) {
      const double v = outputs_[r][j];
      if (!std::isfinite(v) || v < 0.0) {
        throw InputError("invalid value for DMU '" + names_[j] + "', output " +
                         output_labels_[r]);
      }
      positive_output = positive_output || v > 0.0;
    }
    if (!positive_input) throw InputError("DMU '" + names_[j] + "' has all-zero inputs");
    if (!positive_output) throw InputError("DMU '" + names_[j] + "' has all-zero outputs");
  }
}

Activity DMUDataset::column(std::size_t j) const {
  if (j >= num_dmus()) throw InputError("DMU index out of range");
  Activity a;
  a.inputs.reserve(num_inputs());
  a.outputs.reserve(num_outputs());
  for (const auto& row : inputs_) a.inputs.push_back(row[j]);
  for (const auto& row : outputs_) a.outputs.push_back(row[j]);
  return a;
}

std::size_t DMUDataset::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown DMU '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

double DMUDataset::max_abs_value() const {
  double best = 0.0;
  for (const auto& row : inputs_)
    for (double v : row) best = std::max(best, std::abs(v));
  for (const auto& row : outputs_)
    for (double v : row) best = std::max(best, std::abs(v));
  return best;
}

DMUDataset load_dataset(std::istream& source) {
  std::vector<std::string> header;
  std::vector<std::size_t> input_cols;
  std::vector<std::size_t> output_cols;
  std::vector<std::string> names;
  std::vector<std::vector<double>> inputs;
  std::vector<std::vector<double>> outputs;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(source, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (line == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
    const auto content = trim(raw);
    if (content.empty() || content.front() == '#') continue;

    auto fields = split_record(raw, line);
    if (header.empty()) {
      for (auto& f : fields) header.emplace_back(trim(f));
      if (header.front() != "dmu") {
        throw InputError("malformed CSV at " + at_line(line) +
                         ": first column must be named 'dmu'");
      }
      for (std::size_t c = 1; c < header.size(); ++c) {
        const std::string_view h = header[c];
        if (h.starts_with(kInputPrefix) && h.size() > kInputPrefix.size()) {
          input_cols.push_back(c);
        } else if (h.starts_with(kOutputPrefix) && h.size() > kOutputPrefix.size()) {
          output_cols.push_back(c);
        } else {
          throw InputError("malformed CSV at " + at_line(line) + ": column " +
                           std::to_string(c + 1) + " header '" + header[c] +
                           "' must start with 'in:' or 'out:'");
        }
      }
      if (input_cols.empty()) throw InputError("missing 'in:' columns in header");
      if (output_cols.empty()) throw InputError("missing 'out:' columns in header");
      inputs.resize(input_cols.size());
      outputs.resize(output_cols.size());
      continue;
    }

    if (fields.size() != header.size()) {
      throw InputError("malformed CSV at " + at_line(line) + ": expected " +
                       std::to_string(header.size()) + " fields, found " +
                       std::to_string(fields.size()));
    }
    std::string name(trim(fields[0]));
    if (name.empty()) throw InputError("empty DMU name at " + at_line(line));
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw InputError("duplicate DMU name '" + name + "' at " + at_line(line));
    }
    auto read_block = [&](const std::vector<std::size_t>& cols,
                          std::vector<std::vector<double>>& block) {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::string& column = header[cols[k]];
        const double v = parse_number(fields[cols[k]], line, column);
        if (v < 0.0) {
          throw InputError("negative value at " + at_line(line) + ", column " + column);
        }
        block[k].push_back(v);
      }
    };
    read_block(input_cols, inputs);
    read_block(output_cols, outputs);
    names.push_back(std::move(name));
  }
  if (header.empty()) throw InputError("malformed CSV: missing header row");

  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  for (auto c : input_cols) input_labels.push_back(header[c].substr(kInputPrefix.size()));
  for (auto c : output_cols) output_labels.push_back(header[c].substr(kOutputPrefix.size()));
  return DMUDataset(std::move(names), std::move(input_labels), std::move(output_labels),
                    std::move(inputs), std::move(outputs));
}

DMUDataset load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_dataset(in);
}

void write_dataset(std::ostream& out, const DMUDataset& ds) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q.push_back('"');
      q.push_back(c);
    }
    q.push_back('"');
    return q;
  };
  out << "dmu";
  for (const auto& l : ds.input_labels()) out << ',' << quote("in:" + l);
  for (const auto& l : ds.output_labels()) out << ',' << quote("out:" + l);
  out << '\n';
  for (std::size_t j = 0; j < ds.num_dmus(); ++j) {
    out << quote(ds.name(j));
    for (std::size_t i = 0; i < ds.num_inputs(); ++i) out << ',' << format_double(ds.input(i, j));
    for (std::size_t r = 0; r < ds.num_outputs(); ++r) out << ',' << format_double(ds.output(r, j));
    out << '\n';
  }
}

Activity dmu_column(const DMUDataset& ds, std::string_view name) {
  return ds.column(ds.index_of(name));
}

}  // namespace dea
