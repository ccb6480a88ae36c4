#pragma once

// Seeded instance generators and brute-force references shared by the unit
// and acceptance suites.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/lp.hpp"
#include "dea/milp.hpp"

namespace dea::testing {

inline constexpr std::uint64_t kDatasetSeed = 20240611;
inline constexpr std::uint64_t kMilpSeed = 7331;

/// Two inputs, one output, n in [4, 8], values uniform in [1, 10] rounded to
/// two decimals (rounding deliberately produces some exact ties).
inline std::vector<DMUDataset> random_datasets(std::size_t count,
                                               std::uint64_t seed = kDatasetSeed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(4, 8);
  std::uniform_int_distribution<int> cents(100, 1000);
  std::vector<DMUDataset> out;
  for (std::size_t d = 0; d < count; ++d) {
    const int n = size(rng);
    std::vector<std::string> names;
    std::vector<std::vector<double>> x(2, std::vector<double>(n));
    std::vector<std::vector<double>> y(1, std::vector<double>(n));
    for (int j = 0; j < n; ++j) {
      names.push_back("U" + std::to_string(j + 1));
      x[0][j] = cents(rng) / 100.0;
      x[1][j] = cents(rng) / 100.0;
      y[0][j] = cents(rng) / 100.0;
    }
    out.emplace_back(std::move(names), std::vector<std::string>{"x1", "x2"},
                     std::vector<std::string>{"y"}, std::move(x), std::move(y));
  }
  return out;
}

/// Random feasible mixed-binary program with `binaries` binaries and a few
/// bounded continuous variables. Rows are built around a random reference
/// point so at least one assignment is feasible.
inline MILPProgram random_milp(std::mt19937_64& rng, std::size_t binaries) {
  std::uniform_int_distribution<int> cont_count(2, 4);
  std::uniform_int_distribution<int> row_count(3, 6);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);

  const std::size_t c = static_cast<std::size_t>(cont_count(rng));
  const std::size_t n = binaries + c;
  MILPProgram p;
  p.base = LinearProgram(n, coin(rng) ? Sense::minimize : Sense::maximize);
  std::vector<double> reference(n);
  for (std::size_t k = 0; k < n; ++k) {
    p.base.objective[k] = coef(rng);
    if (k < binaries) {
      p.base.upper_bounds[k] = 1.0;
      p.binary_vars.push_back(k);
      reference[k] = coin(rng) ? 1.0 : 0.0;
    } else {
      p.base.upper_bounds[k] = 5.0;
      reference[k] = 5.0 * unit(rng);
    }
  }
  const int rows = row_count(rng);
  for (int i = 0; i < rows; ++i) {
    std::vector<double> a(n);
    double lhs = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = coef(rng);
      lhs += a[k] * reference[k];
    }
    const int kind = std::uniform_int_distribution<int>(0, 4)(rng);
    if (kind == 0) {
      p.base.add_row(std::move(a), Relation::equal, lhs);
    } else if (kind <= 2) {
      p.base.add_row(std::move(a), Relation::less_equal, lhs + 2.0 * unit(rng));
    } else {
      p.base.add_row(std::move(a), Relation::greater_equal, lhs - 2.0 * unit(rng));
    }
  }
  return p;
}

struct EnumerationResult {
  bool feasible = false;
  double objective = 0.0;
};

/// Best objective over all 2^k binary assignments, each solved as an LP.
inline EnumerationResult enumerate_binaries(const MILPProgram& p) {
  EnumerationResult best;
  const bool maximize = p.base.sense == Sense::maximize;
  const std::size_t k = p.binary_vars.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    LinearProgram lp = p.base;
    for (std::size_t b = 0; b < k; ++b) {
      const double v = (mask >> b) & 1u ? 1.0 : 0.0;
      lp.lower_bounds[p.binary_vars[b]] = v;
      lp.upper_bounds[p.binary_vars[b]] = v;
    }
    const auto sol = solve_lp(lp);
    if (!sol.optimal()) continue;
    if (!best.feasible || (maximize ? sol.objective > best.objective : sol.objective < best.objective)) {
      best.feasible = true;
      best.objective = sol.objective;
    }
  }
  return best;
}

}  // namespace dea::testing
