#pragma once

#include <cstddef>

namespace dea {

struct ToleranceConfig {
  /// Smallest magnitude accepted as a pivot element.
  double pivot = 1e-9;
  /// Allowed violation of a row or bound, relative to max(1, |rhs|).
  double feasibility = 1e-7;
  /// Reduced costs above -optimality are treated as nonnegative.
  double optimality = 1e-9;
  /// Distance from {0, 1} at which a binary counts as integral.
  double integrality = 1e-6;
  /// Simplex pivots per solve (both phases) before giving up.
  std::size_t max_iterations = 50'000;
};

}  // namespace dea
