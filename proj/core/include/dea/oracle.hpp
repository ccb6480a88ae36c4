#pragma once

#include <cstddef>

#include "dea/dataset.hpp"
#include "dea/models.hpp"
#include "dea/tolerance.hpp"

namespace dea {

/// Exhaustive-search cross-checks for the closest-projection MILP and the
/// maximal reference set LP. Both only ever solve plain LPs and are limited
/// to small instances: m + s <= 4 and n <= 12.
inline constexpr std::size_t kOracleMaxDimension = 4;
inline constexpr std::size_t kOracleMaxDmus = 12;

struct OracleProjection {
  double objective = 0.0;
  Activity point;
  /// Efficient DMUs spanning the face the optimum was found on.
  IndexSet face;
};

/// Minimum L1 distance from DMU o to the Pareto frontier, by enumerating
/// every set B of at most m+s-1 efficient DMUs that lies on a common
/// supporting hyperplane (v, u >= 1) and minimising the slacks needed to
/// reach the cone of B.
OracleProjection oracle_closest(const DMUDataset& ds, std::size_t o,
                                const ToleranceConfig& tol = {});

/// Efficient DMUs that carry positive weight in at least one nonnegative
/// representation of `point`, found one DMU at a time by maximising its
/// weight. Throws PreconditionError when `point` is not Pareto-efficient.
IndexSet oracle_maximal_set(const DMUDataset& ds, const Activity& point,
                            const ToleranceConfig& tol = {});

}  // namespace dea
