#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/milp.hpp"
#include "dea/tolerance.hpp"

namespace dea {

using IndexSet = std::set<std::size_t>;

/// Relative cutoff for treating an intensity weight as positive.
inline constexpr double kMembershipThreshold = 1e-6;
/// Relative cutoff for a zero additive optimum.
inline constexpr double kEfficiencyThreshold = 1e-6;
/// Relative cutoff for a DMU lying on a supporting hyperplane.
inline constexpr double kSupportThreshold = 1e-6;
/// Fraction of M within which a big-M switch counts as saturated.
inline constexpr double kSaturationFraction = 1e-3;

enum class EfficiencyStatus { extreme_efficient, efficient_nonextreme, inefficient };

std::string_view to_string(EfficiencyStatus status);

inline bool is_efficient(EfficiencyStatus s) { return s != EfficiencyStatus::inefficient; }

struct Classification {
  std::vector<EfficiencyStatus> status;
  /// Additive-model optimum of each DMU (0 for efficient units).
  std::vector<double> additive_objective;

  IndexSet efficient() const;
  IndexSet extreme_efficient() const;
};

/// Supporting hyperplane u.y - v.x = 0 of the constant-returns cone.
struct Hyperplane {
  std::vector<double> v;  // input weights, all >= 1
  std::vector<double> u;  // output weights, all >= 1

  /// u.y - v.x; nonpositive on the technology, zero on the hyperplane.
  double value(const Activity& a) const;
  /// u.y_j - v.x_j for DMU j.
  double value(const DMUDataset& ds, std::size_t j) const;
};

/// Scale used for hyperplane residuals: max(1, max_j (u.y_j + v.x_j)).
double hyperplane_scale(const DMUDataset& ds, const Hyperplane& h);

enum class ProjectionMode { closest, furthest };

struct ProjectionResult {
  ProjectionMode mode = ProjectionMode::closest;
  std::size_t dmu = 0;
  Activity point;
  /// `inputs` holds s^- and `outputs` holds s^+.
  Activity slacks;
  std::map<std::size_t, double> lambda;
  /// Hyperplane deficits v.x_j - u.y_j per candidate (closest mode only).
  std::map<std::size_t, double> deficits;
  std::optional<Hyperplane> hyperplane;
  double objective = 0.0;
  /// Branch-and-bound nodes spent (closest mode only).
  std::size_t nodes = 0;
};

struct ReferenceSetResult {
  ProjectionResult projection;
  IndexSet candidates;
  IndexSet members;
  std::map<std::size_t, double> mu;
  std::map<std::size_t, double> t;
  double eta = 0.0;
  Hyperplane hyperplane;
};

/// Efficient iff the additive optimum is zero; an efficient DMU is extreme
/// iff its column is not a nonnegative combination of the other efficient
/// DMUs.
Classification classify_all(const DMUDataset& ds, const ToleranceConfig& tol = {});

/// Furthest Pareto projection from the constant-returns additive model.
///
/// When the additive model has several optimal solutions the returned
/// point is the barycentre of optimal solutions that together give positive
/// weight to every DMU that is positive in any of them, so the reference set
/// of the point does not depend on which vertex the simplex lands on.
ProjectionResult solve_additive(const DMUDataset& ds, std::size_t o,
                                const ToleranceConfig& tol = {});

/// 1e5 times the largest absolute data value.
double default_big_m(const DMUDataset& ds);

/// Closest Pareto projection of DMU o: minimum L1 slacks over points that lie
/// on a supporting hyperplane (v, u >= 1) of the candidate DMUs, with the
/// "lambda_j = 0 or d_j = 0" disjunction modelled by big-M binaries.
///
/// The hyperplane reported is the one with the smallest weight sum among
/// those compatible with the optimal binary pattern. Throws SaturationError
/// when M is too small for the data.
ProjectionResult solve_madd(const DMUDataset& ds, std::size_t o, const IndexSet& candidates,
                            double big_m, const ToleranceConfig& tol = {},
                            std::size_t node_limit = kDefaultNodeLimit);

/// Candidates whose deficit on the projection's hyperplane is zero.
IndexSet support_set(const DMUDataset& ds, const ProjectionResult& proj,
                     const IndexSet& candidates);

/// Deficits v.x_j - u.y_j of `candidates` on `h`.
std::map<std::size_t, double> deficits_on(const DMUDataset& ds, const Hyperplane& h,
                                          const IndexSet& candidates);

/// Maximal reference set of a fixed Pareto-efficient projection.
///
/// Maximises eta subject to mu_j + t_j >= eta, where mu represents the
/// projection and t_j is the slack of DMU j below a supporting hyperplane
/// through it. Every candidate ends with exactly one of mu_j, t_j positive;
/// the members are those with mu_j > 0. The hyperplane is also kept on or
/// below every DMU outside `candidates`.
ReferenceSetResult solve_mcrs(const DMUDataset& ds, const ProjectionResult& proj,
                              const IndexSet& candidates, const ToleranceConfig& tol = {});

/// True iff the additive model evaluating `point` against the dataset has a
/// zero optimum, i.e. the point lies on the Pareto-efficient frontier.
bool is_pareto_efficient(const DMUDataset& ds, const Activity& point,
                         const ToleranceConfig& tol = {});

/// Additive optimum of an arbitrary point against the DMUs in `reference`;
/// nullopt when no nonnegative combination dominates the point.
std::optional<double> additive_objective(const DMUDataset& ds, const Activity& point,
                                         const IndexSet& reference,
                                         const ToleranceConfig& tol = {});

/// Every DMU index of `ds`.
IndexSet all_dmus(const DMUDataset& ds);

}  // namespace dea
