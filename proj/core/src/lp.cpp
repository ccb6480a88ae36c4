#include "dea/lp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "dea/error.hpp"

namespace dea {

std::size_t LinearProgram::add_row(std::vector<double> coefficients, Relation relation,
                                   double rhs) {
  rows.push_back(LinearRow{std::move(coefficients), relation, rhs});
  return rows.size() - 1;
}

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  if (lower_bounds.size() != n || upper_bounds.size() != n) {
    throw InputError("bound vectors must match the objective length");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (std::isnan(lower_bounds[k]) || std::isnan(upper_bounds[k]) ||
        lower_bounds[k] > upper_bounds[k] || lower_bounds[k] == kInfinity ||
        upper_bounds[k] == -kInfinity) {
      throw InputError("inconsistent bounds on variable " + std::to_string(k));
    }
    if (!std::isfinite(objective[k])) {
      throw InputError("non-finite objective coefficient on variable " + std::to_string(k));
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].coefficients.size() != n) {
      throw InputError("row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].coefficients.size()) +
                       " coefficients, expected " + std::to_string(n));
    }
    if (!std::isfinite(rows[i].rhs)) {
      throw InputError("non-finite right-hand side in row " + std::to_string(i));
    }
    for (double a : rows[i].coefficients) {
      if (!std::isfinite(a)) {
        throw InputError("non-finite coefficient in row " + std::to_string(i));
      }
    }
  }
}

double evaluate_objective(const LinearProgram& p, const std::vector<double>& x) {
  double z = 0.0;
  for (std::size_t k = 0; k < p.objective.size(); ++k) z += p.objective[k] * x[k];
  return z;
}

double max_violation(const LinearProgram& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    worst = std::max(worst, p.lower_bounds[k] - x[k]);
    worst = std::max(worst, x[k] - p.upper_bounds[k]);
  }
  for (const auto& row : p.rows) {
    double lhs = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) lhs += row.coefficients[k] * x[k];
    switch (row.relation) {
      case Relation::less_equal: worst = std::max(worst, lhs - row.rhs); break;
      case Relation::greater_equal: worst = std::max(worst, row.rhs - lhs); break;
      case Relation::equal: worst = std::max(worst, std::abs(lhs - row.rhs)); break;
    }
  }
  return worst;
}

namespace {

// How one original variable maps onto nonnegative tableau columns:
// x = shift + sum(sign * column).
struct VariableMap {
  double shift = 0.0;
  std::vector<std::pair<std::size_t, double>> columns;
};

struct StandardRow {
  std::vector<double> coefficients;  // over structural columns
  Relation relation;
  double rhs;
  double sign = 1.0;                        // -1 when negated to make rhs >= 0
  std::optional<std::size_t> original_row;  // unset for bound rows
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : width_(columns + 1), data_(rows * width_, 0.0), cost_(width_, 0.0), basis_(rows) {}

  double& at(std::size_t row, std::size_t col) { return data_[row * width_ + col]; }
  double at(std::size_t row, std::size_t col) const { return data_[row * width_ + col]; }
  double& rhs(std::size_t row) { return at(row, width_ - 1); }
  double rhs(std::size_t row) const { return at(row, width_ - 1); }

  std::size_t rows() const { return basis_.size(); }
  std::size_t columns() const { return width_ - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  double reduced_cost(std::size_t col) const { return cost_[col]; }
  double objective() const { return -cost_[width_ - 1]; }

  // Installs a cost vector and prices out the current basis.
  void set_costs(const std::vector<double>& c) {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    std::copy(c.begin(), c.end(), cost_.begin());
    for (std::size_t k = 0; k < rows(); ++k) {
      const double cb = c[basis_[k]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= cb * at(k, j);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    double* prow = &data_[row * width_];
    const double inv = 1.0 / prow[col];
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[col] = 1.0;
    for (std::size_t k = 0; k < rows(); ++k) {
      if (k == row) continue;
      double* krow = &data_[k * width_];
      const double factor = krow[col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) krow[j] -= factor * prow[j];
      krow[col] = 0.0;
    }
    const double factor = cost_[col];
    if (factor != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= factor * prow[j];
      cost_[col] = 0.0;
    }
    basis_[row] = col;
  }

 private:
  std::size_t width_;
  std::vector<double> data_;
  std::vector<double> cost_;
  std::vector<std::size_t> basis_;
};

enum class PhaseResult { optimal, unbounded };

class SimplexDriver {
 public:
  SimplexDriver(Tableau& t, const ToleranceConfig& tol, std::vector<bool> enterable)
      : t_(t), tol_(tol), enterable_(std::move(enterable)) {}

  void set_enterable(std::vector<bool> enterable) { enterable_ = std::move(enterable); }
  std::size_t iterations() const { return iterations_; }

  PhaseResult run() {
    for (;;) {
      auto entering = dantzig_column();
      if (!entering) return PhaseResult::optimal;
      auto leaving = ratio_test(*entering);
      if (!leaving) return PhaseResult::unbounded;
      if (std::max(0.0, t_.rhs(*leaving)) / t_.at(*leaving, *entering) <= tol_.pivot) {
        entering = bland_column();
        leaving = ratio_test(*entering);
        if (!leaving) return PhaseResult::unbounded;
      }
      if (++iterations_ > tol_.max_iterations) {
        throw IterationLimitError("simplex exceeded " + std::to_string(tol_.max_iterations) +
                                  " iterations");
      }
      t_.pivot(*leaving, *entering);
    }
  }

 private:
  std::optional<std::size_t> dantzig_column() const {
    std::optional<std::size_t> best;
    double best_value = -tol_.optimality;
    for (std::size_t j = 0; j < t_.columns(); ++j) {
      if (!enterable_[j]) continue;
      const double r = t_.reduced_cost(j);
      if (r < best_value) {
        best_value = r;
        best = j;
      }
    }
    return best;
  }

  std::optional<std::size_t> bland_column() const {
    for (std::size_t j = 0; j < t_.columns(); ++j) {
      if (enterable_[j] && t_.reduced_cost(j) < -tol_.optimality) return j;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> ratio_test(std::size_t col) {
    std::optional<std::size_t> best;
    double best_ratio = kInfinity;
    for (std::size_t k = 0; k < t_.rows(); ++k) {
      const double a = t_.at(k, col);
      if (a <= tol_.pivot) continue;
      const double ratio = std::max(0.0, t_.rhs(k)) / a;
      if (!best) {
        best = k;
        best_ratio = ratio;
        continue;
      }
      const double tie = 1e-12 * (1.0 + best_ratio);
      if (ratio < best_ratio - tie) {
        best = k;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + tie && t_.basis()[k] < t_.basis()[*best]) {
        best = k;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    return best;
  }

  Tableau& t_;
  const ToleranceConfig& tol_;
  std::vector<bool> enterable_;
  std::size_t iterations_ = 0;
};

}  // namespace

LPSolution solve_lp(const LinearProgram& p, const ToleranceConfig& tol) {
  p.validate();
  const std::size_t n = p.num_variables();
  const double sense_sign = p.sense == Sense::maximize ? -1.0 : 1.0;

  // Map original variables onto nonnegative structural columns.
  std::vector<VariableMap> vars(n);
  std::vector<double> structural_cost;
  std::vector<std::pair<std::size_t, double>> upper_rows;  // (column, bound)
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = p.lower_bounds[k];
    const double hi = p.upper_bounds[k];
    auto add_column = [&](double sign) {
      vars[k].columns.emplace_back(structural_cost.size(), sign);
      structural_cost.push_back(sense_sign * sign * p.objective[k]);
      return structural_cost.size() - 1;
    };
    if (lo == hi) {
      vars[k].shift = lo;
    } else if (std::isfinite(lo)) {
      vars[k].shift = lo;
      const auto col = add_column(1.0);
      if (std::isfinite(hi)) upper_rows.emplace_back(col, hi - lo);
    } else if (std::isfinite(hi)) {
      vars[k].shift = hi;
      add_column(-1.0);
    } else {
      add_column(1.0);
      add_column(-1.0);
    }
  }
  const std::size_t num_structural = structural_cost.size();

  LPSolution solution;
  solution.duals.assign(p.rows.size(), 0.0);

  auto feasibility_slack = [&](double rhs) {
    return tol.feasibility * std::max(1.0, std::abs(rhs));
  };

  std::vector<StandardRow> rows;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto& src = p.rows[i];
    StandardRow row{std::vector<double>(num_structural, 0.0), src.relation, src.rhs, 1.0, i};
    bool empty = true;
    for (std::size_t k = 0; k < n; ++k) {
      const double a = src.coefficients[k];
      if (a == 0.0) continue;
      row.rhs -= a * vars[k].shift;
      for (auto [col, sign] : vars[k].columns) {
        row.coefficients[col] += a * sign;
        empty = false;
      }
    }
    if (empty) {
      const double slack = feasibility_slack(src.rhs);
      const bool ok = (row.relation == Relation::less_equal && row.rhs >= -slack) ||
                      (row.relation == Relation::greater_equal && row.rhs <= slack) ||
                      (row.relation == Relation::equal && std::abs(row.rhs) <= slack);
      if (!ok) {
        solution.status = LPStatus::infeasible;
        return solution;
      }
      continue;
    }
    rows.push_back(std::move(row));
  }
  for (auto [col, bound] : upper_rows) {
    StandardRow row{std::vector<double>(num_structural, 0.0), Relation::less_equal, bound, 1.0,
                    std::nullopt};
    row.coefficients[col] = 1.0;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (row.rhs < 0.0) {
      row.sign = -1.0;
      row.rhs = -row.rhs;
      for (double& a : row.coefficients) a = -a;
      if (row.relation == Relation::less_equal) {
        row.relation = Relation::greater_equal;
      } else if (row.relation == Relation::greater_equal) {
        row.relation = Relation::less_equal;
      }
    }
  }

  // Column layout: structural | one slack/surplus per inequality | artificials.
  std::size_t num_columns = num_structural;
  std::vector<std::size_t> unit_column(rows.size());
  std::vector<std::optional<std::size_t>> surplus_column(rows.size());
  std::vector<bool> artificial;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].relation != Relation::equal) surplus_column[i] = num_columns++;
  }
  artificial.assign(num_columns, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].relation == Relation::less_equal) {
      unit_column[i] = *surplus_column[i];
    } else {
      unit_column[i] = num_columns++;
      artificial.push_back(true);
    }
  }

  Tableau t(rows.size(), num_columns);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < num_structural; ++j) t.at(i, j) = rows[i].coefficients[j];
    if (surplus_column[i]) {
      t.at(i, *surplus_column[i]) = rows[i].relation == Relation::less_equal ? 1.0 : -1.0;
    }
    t.at(i, unit_column[i]) = 1.0;
    t.rhs(i) = rows[i].rhs;
    t.basis()[i] = unit_column[i];
  }

  const bool needs_phase_one = std::find(artificial.begin(), artificial.end(), true) != artificial.end();
  std::vector<bool> enterable(num_columns, true);
  SimplexDriver driver(t, tol, enterable);

  if (needs_phase_one) {
    std::vector<double> phase_one_cost(num_columns, 0.0);
    for (std::size_t j = 0; j < num_columns; ++j) phase_one_cost[j] = artificial[j] ? 1.0 : 0.0;
    t.set_costs(phase_one_cost);
    driver.run();
    // Each artificial is judged against the scale of its own row.
    std::vector<double> artificial_limit(num_columns, 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (artificial[unit_column[i]]) artificial_limit[unit_column[i]] = feasibility_slack(rows[i].rhs);
    }
    bool infeasible = false;
    for (std::size_t k = 0; k < t.rows(); ++k) {
      const std::size_t col = t.basis()[k];
      if (artificial[col] && t.rhs(k) > artificial_limit[col]) infeasible = true;
    }
    if (infeasible) {
      solution.status = LPStatus::infeasible;
      solution.iterations = driver.iterations();
      return solution;
    }
    // Pivot zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and keep their artificial at zero.
    for (std::size_t k = 0; k < t.rows(); ++k) {
      if (!artificial[t.basis()[k]]) continue;
      std::optional<std::size_t> best;
      double best_abs = tol.pivot;
      for (std::size_t j = 0; j < num_columns; ++j) {
        if (artificial[j]) continue;
        const double a = std::abs(t.at(k, j));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      if (best) {
        t.rhs(k) = 0.0;
        t.pivot(k, *best);
      }
    }
    for (std::size_t j = 0; j < num_columns; ++j) enterable[j] = !artificial[j];
    driver.set_enterable(enterable);
  }

  std::vector<double> phase_two_cost(num_columns, 0.0);
  std::copy(structural_cost.begin(), structural_cost.end(), phase_two_cost.begin());
  t.set_costs(phase_two_cost);
  const auto result = driver.run();
  solution.iterations = driver.iterations();
  if (result == PhaseResult::unbounded) {
    solution.status = LPStatus::unbounded;
    return solution;
  }

  std::vector<double> column_value(num_columns, 0.0);
  for (std::size_t k = 0; k < t.rows(); ++k) column_value[t.basis()[k]] = std::max(0.0, t.rhs(k));
  solution.primal.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double x = vars[k].shift;
    for (auto [col, sign] : vars[k].columns) x += sign * column_value[col];
    solution.primal[k] = x;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].original_row) continue;
    double y = 0.0;
    for (std::size_t k = 0; k < t.rows(); ++k) {
      y += phase_two_cost[t.basis()[k]] * t.at(k, unit_column[i]);
    }
    solution.duals[*rows[i].original_row] = sense_sign * rows[i].sign * y;
  }
  solution.status = LPStatus::optimal;
  solution.objective = evaluate_objective(p, solution.primal);
  return solution;
}

}  // namespace dea
