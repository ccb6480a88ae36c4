#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dea/error.hpp"
#include "dea/milp.hpp"
#include "support/instances.hpp"

namespace dea {
namespace {

TEST(SolveMilp, RoundsUp) {
  MILPProgram p;
  p.base = LinearProgram(1);
  p.base.objective = {1};
  p.base.upper_bounds = {1};
  p.base.add_row({1}, Relation::greater_equal, 0.3);
  p.binary_vars = {0};
  const auto sol = solve_milp(p);
  ASSERT_TRUE(sol.optimal());
  EXPECT_TRUE(sol.proven);
  EXPECT_DOUBLE_EQ(sol.primal[0], 1.0);
  EXPECT_DOUBLE_EQ(sol.objective, 1.0);
  EXPECT_NEAR(sol.root_bound, 0.3, 1e-12);
}

TEST(SolveMilp, Infeasible) {
  // b1 + b2 = 1.5 has no binary solution.
  MILPProgram p;
  p.base = LinearProgram(2);
  p.base.upper_bounds = {1, 1};
  p.base.add_row({1, 1}, Relation::equal, 1.5);
  p.binary_vars = {0, 1};
  const auto sol = solve_milp(p);
  EXPECT_EQ(sol.status, MILPStatus::infeasible);
  EXPECT_GT(sol.node_count, 1u);
}

TEST(SolveMilp, KnapsackMaximisation) {
  // Values 10, 13, 7, 8; weights 5, 7, 4, 3; capacity 12 -> items {0, 2, 3}, value 25.
  MILPProgram p;
  p.base = LinearProgram(4, Sense::maximize);
  p.base.objective = {10, 13, 7, 8};
  p.base.upper_bounds = {1, 1, 1, 1};
  p.base.add_row({5, 7, 4, 3}, Relation::less_equal, 12);
  p.binary_vars = {0, 1, 2, 3};
  const auto sol = solve_milp(p);
  ASSERT_TRUE(sol.optimal());
  EXPECT_NEAR(sol.objective, 25.0, 1e-12);
  EXPECT_GE(sol.root_bound, sol.objective);
  EXPECT_EQ(sol.primal, (std::vector<double>{1, 0, 1, 1}));
}

TEST(SolveMilp, RejectsNonBinaryBounds) {
  MILPProgram p;
  p.base = LinearProgram(1);
  p.binary_vars = {0};  // upper bound is +inf
  EXPECT_THROW(solve_milp(p), InputError);
  p.binary_vars = {3};
  EXPECT_THROW(solve_milp(p), InputError);
}

TEST(SolveMilp, NodeLimit) {
  std::mt19937_64 rng(5);
  // Find an instance that needs more than one node.
  for (int attempt = 0; attempt < 50; ++attempt) {
    const auto p = testing::random_milp(rng, 8);
    const auto full = solve_milp(p);
    if (full.node_count < 4) continue;
    try {
      const auto cut = solve_milp(p, {}, 2);
      EXPECT_FALSE(cut.proven);
      EXPECT_EQ(cut.node_count, 2u);
    } catch (const NodeLimitError&) {
      SUCCEED();
    }
    return;
  }
  FAIL() << "no instance needed branching";
}

TEST(SolveMilpProperties, AgreesWithEnumeration) {
  std::mt19937_64 rng(testing::kMilpSeed + 1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 8);
    const auto p = testing::random_milp(rng, k);
    const auto expected = testing::enumerate_binaries(p);
    const auto sol = solve_milp(p);
    ASSERT_EQ(sol.optimal(), expected.feasible) << "trial " << trial;
    if (!expected.feasible) continue;
    EXPECT_NEAR(sol.objective, expected.objective, 1e-8) << "trial " << trial;

    const bool minimize = p.base.sense == Sense::minimize;
    if (minimize) {
      EXPECT_GE(sol.objective, sol.root_bound - 1e-9);
    } else {
      EXPECT_LE(sol.objective, sol.root_bound + 1e-9);
    }
    for (auto b : p.binary_vars) {
      EXPECT_TRUE(sol.primal[b] == 0.0 || sol.primal[b] == 1.0);
    }
    // Fix binaries, re-solve, same objective.
    LinearProgram fixed = p.base;
    for (auto b : p.binary_vars) fixed.lower_bounds[b] = fixed.upper_bounds[b] = sol.primal[b];
    const auto again = solve_lp(fixed);
    ASSERT_TRUE(again.optimal());
    EXPECT_NEAR(again.objective, sol.objective, 1e-8);
  }
}

}  // namespace
}  // namespace dea
