#pragma once

#include <cstddef>
#include <vector>

#include "dea/lp.hpp"
#include "dea/tolerance.hpp"

namespace dea {

/// A linear program in which some variables must take values in {0, 1}.
struct MILPProgram {
  LinearProgram base;
  /// Indices into `base`; each must carry bounds [0, 1].
  std::vector<std::size_t> binary_vars;

  void validate() const;
};

enum class MILPStatus { optimal, infeasible };

struct MILPSolution {
  MILPStatus status = MILPStatus::infeasible;
  double objective = 0.0;
  std::vector<double> primal;
  std::size_t node_count = 0;
  /// Objective of the root relaxation (a bound on every feasible objective).
  double root_bound = 0.0;
  /// False when the node limit cut the search short; `primal` is then the
  /// best incumbent found, not a certified optimum.
  bool proven = true;

  bool optimal() const { return status == MILPStatus::optimal; }
};

inline constexpr std::size_t kDefaultNodeLimit = 100'000;

/// Depth-first branch-and-bound over the binaries of `p`.
///
/// Branches on the most fractional binary and explores the `b = 1` child
/// first. Every incumbent is polished by re-solving the LP with all binaries
/// fixed to their rounded values, so `objective` is exactly the LP value of
/// that assignment.
///
/// When the node limit is reached the best incumbent is returned with
/// `proven == false`; if there is no incumbent at that point NodeLimitError
/// is thrown.
MILPSolution solve_milp(const MILPProgram& p, const ToleranceConfig& tol = {},
                        std::size_t node_limit = kDefaultNodeLimit);

}  // namespace dea
