#include "dea/milp.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "dea/error.hpp"

namespace dea {

void MILPProgram::validate() const {
  base.validate();
  for (auto k : binary_vars) {
    if (k >= base.num_variables()) {
      throw InputError("binary variable index " + std::to_string(k) + " out of range");
    }
    if (base.lower_bounds[k] < 0.0 || base.upper_bounds[k] > 1.0) {
      throw InputError("binary variable " + std::to_string(k) + " must have bounds within [0, 1]");
    }
  }
}

namespace {

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
};

std::optional<std::size_t> most_fractional(const std::vector<std::size_t>& binaries,
                                           const std::vector<double>& x, double threshold) {
  std::optional<std::size_t> best;
  double best_frac = threshold;
  for (auto k : binaries) {
    const double frac = std::min(x[k], 1.0 - x[k]);
    if (frac > best_frac) {
      best_frac = frac;
      best = k;
    }
  }
  return best;
}

}  // namespace

MILPSolution solve_milp(const MILPProgram& p, const ToleranceConfig& tol, std::size_t node_limit) {
  p.validate();
  const double sign = p.base.sense == Sense::maximize ? -1.0 : 1.0;

  MILPSolution result;
  LinearProgram work = p.base;
  std::optional<double> incumbent_key;

  auto solve_with = [&](const Node& node) {
    work.lower_bounds = node.lower;
    work.upper_bounds = node.upper;
    auto sol = solve_lp(work, tol);
    if (sol.status == LPStatus::unbounded) {
      throw SolverError("mixed-binary relaxation is unbounded");
    }
    return sol;
  };

  auto offer_incumbent = [&](const LPSolution& sol) {
    const double key = sign * sol.objective;
    if (!incumbent_key || key < *incumbent_key) {
      incumbent_key = key;
      result.status = MILPStatus::optimal;
      result.objective = sol.objective;
      result.primal = sol.primal;
    }
  };

  std::vector<Node> stack;
  stack.push_back(Node{p.base.lower_bounds, p.base.upper_bounds});
  bool root = true;

  while (!stack.empty()) {
    if (result.node_count >= node_limit) {
      result.proven = false;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++result.node_count;

    const auto sol = solve_with(node);
    if (root) {
      root = false;
      if (!sol.optimal()) return result;
      result.root_bound = sol.objective;
    }
    if (!sol.optimal()) continue;

    const double key = sign * sol.objective;
    if (incumbent_key && key >= *incumbent_key - 1e-9 * std::max(1.0, std::abs(*incumbent_key))) {
      continue;
    }

    auto branch = most_fractional(p.binary_vars, sol.primal, tol.integrality);
    if (!branch) {
      Node fixed = node;
      for (auto k : p.binary_vars) {
        const double v = std::round(sol.primal[k]);
        fixed.lower[k] = v;
        fixed.upper[k] = v;
      }
      const auto polished = solve_with(fixed);
      if (polished.optimal()) {
        offer_incumbent(polished);
        continue;
      }
      // Rounding broke feasibility: branch on whatever fractionality remains.
      branch = most_fractional(p.binary_vars, sol.primal, 0.0);
      if (!branch) continue;
    }

    Node down = node;
    down.lower[*branch] = 0.0;
    down.upper[*branch] = 0.0;
    Node up = std::move(node);
    up.lower[*branch] = 1.0;
    up.upper[*branch] = 1.0;
    stack.push_back(std::move(down));
    stack.push_back(std::move(up));
  }

  if (!result.optimal() && !result.proven) {
    throw NodeLimitError("branch-and-bound hit the node limit of " + std::to_string(node_limit) +
                         " without finding a feasible assignment");
  }
  return result;
}

}  // namespace dea
