#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "dea/tolerance.hpp"

namespace dea {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };

struct LinearRow {
  std::vector<double> coefficients;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
};

/// Dense linear program over `num_variables()` columns.
///
/// Lower bounds default to 0 and upper bounds to +inf. A lower bound of
/// -inf is allowed (free or upper-bounded-only variables); a variable with
/// lower == upper is treated as fixed.
struct LinearProgram {
  Sense sense = Sense::minimize;
  std::vector<double> objective;
  std::vector<LinearRow> rows;
  std::vector<double> lower_bounds;
  std::vector<double> upper_bounds;

  LinearProgram() = default;
  explicit LinearProgram(std::size_t num_variables, Sense s = Sense::minimize)
      : sense(s),
        objective(num_variables, 0.0),
        lower_bounds(num_variables, 0.0),
        upper_bounds(num_variables, kInfinity) {}

  std::size_t num_variables() const { return objective.size(); }

  /// Appends a row and returns its index.
  std::size_t add_row(std::vector<double> coefficients, Relation relation, double rhs);

  /// Throws InputError if shapes or bounds are inconsistent.
  void validate() const;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  double objective = 0.0;
  std::vector<double> primal;
  /// Shadow price of each row: d(objective)/d(rhs). Zero for rows that
  /// were dropped as empty.
  std::vector<double> duals;
  std::size_t iterations = 0;

  bool optimal() const { return status == LPStatus::optimal; }
};

/// Two-phase primal simplex on a dense tableau.
///
/// Entering variables follow Dantzig's rule; once a pivot would be
/// degenerate the choice switches to Bland's rule for that pivot. Ratio-test
/// ties go to the lowest variable index. Throws IterationLimitError when
/// `tol.max_iterations` pivots are exceeded.
LPSolution solve_lp(const LinearProgram& p, const ToleranceConfig& tol = {});

/// Largest violation of any row or bound by `x`.
double max_violation(const LinearProgram& p, const std::vector<double>& x);

/// c . x
double evaluate_objective(const LinearProgram& p, const std::vector<double>& x);

}  // namespace dea
