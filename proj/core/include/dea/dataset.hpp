#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dea {

/// A point of input/output space: m input levels and s output levels.
struct Activity {
  std::vector<double> inputs;
  std::vector<double> outputs;

  friend bool operator==(const Activity&, const Activity&) = default;
};

/// Immutable table of decision making units.
///
/// Inputs are stored as an m x n matrix and outputs as an s x n matrix,
/// both column-per-DMU. Labels are carried for display only; every model
/// addresses inputs, outputs and DMUs positionally.
class DMUDataset {
 public:
  /// Validates and takes ownership. `inputs[i][j]` is input i of DMU j.
  /// Throws InputError when any invariant is violated.
  DMUDataset(std::vector<std::string> names,
             std::vector<std::string> input_labels,
             std::vector<std::string> output_labels,
             std::vector<std::vector<double>> inputs,
             std::vector<std::vector<double>> outputs);

  std::size_t num_dmus() const { return names_.size(); }
  std::size_t num_inputs() const { return input_labels_.size(); }
  std::size_t num_outputs() const { return output_labels_.size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t j) const { return names_.at(j); }
  const std::vector<std::string>& input_labels() const { return input_labels_; }
  const std::vector<std::string>& output_labels() const { return output_labels_; }

  double input(std::size_t i, std::size_t j) const { return inputs_[i][j]; }
  double output(std::size_t r, std::size_t j) const { return outputs_[r][j]; }

  /// Column of DMU j.
  Activity column(std::size_t j) const;

  /// Position of `name`; throws InputError for unknown names.
  std::size_t index_of(std::string_view name) const;

  /// Largest absolute value over every data cell.
  double max_abs_value() const;

  friend bool operator==(const DMUDataset&, const DMUDataset&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> input_labels_;
  std::vector<std::string> output_labels_;
  std::vector<std::vector<double>> inputs_;
  std::vector<std::vector<double>> outputs_;
};

/// Parses the CSV layout
///
///     dmu,in:<label>...,out:<label>...
///
/// Lines starting with `#` and blank lines are skipped. Values accept plain
/// and scientific notation independent of locale. Errors carry the 1-based
/// line number and the column header.
DMUDataset load_dataset(std::istream& source);
DMUDataset load_dataset_file(const std::string& path);

/// Writes the dataset in the format `load_dataset` reads. Values use the
/// shortest representation that round-trips exactly.
void write_dataset(std::ostream& out, const DMUDataset& ds);

/// Input/output column of the DMU called `name`.
Activity dmu_column(const DMUDataset& ds, std::string_view name);

}  // namespace dea
