#include "dea/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dea/error.hpp"
#include "dea/lp.hpp"

namespace dea {
namespace {

void check_regime(const DMUDataset& ds) {
  if (ds.num_inputs() + ds.num_outputs() > kOracleMaxDimension ||
      ds.num_dmus() > kOracleMaxDmus) {
    throw InputError("dataset exceeds the exhaustive-search regime (m + s <= 4, n <= 12)");
  }
}

// Is there (v, u) >= 1 with u.y_j - v.x_j = 0 on `face` and <= 0 on `others`?
bool has_supporting_hyperplane(const DMUDataset& ds, const std::vector<std::size_t>& face,
                               const std::vector<std::size_t>& others,
                               const ToleranceConfig& tol) {
  const std::size_t m = ds.num_inputs();
  const std::size_t s = ds.num_outputs();
  LinearProgram lp(m + s);
  for (auto& lo : lp.lower_bounds) lo = 1.0;
  auto add = [&](std::size_t j, Relation rel) {
    std::vector<double> row(m + s, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = -ds.input(i, j);
    for (std::size_t r = 0; r < s; ++r) row[m + r] = ds.output(r, j);
    lp.add_row(std::move(row), rel, 0.0);
  };
  for (auto j : face) add(j, Relation::equal);
  for (auto j : others) add(j, Relation::less_equal);
  return solve_lp(lp, tol).optimal();
}

}  // namespace

OracleProjection oracle_closest(const DMUDataset& ds, std::size_t o, const ToleranceConfig& tol) {
  check_regime(ds);
  if (o >= ds.num_dmus()) throw InputError("DMU index out of range");
  const std::size_t m = ds.num_inputs();
  const std::size_t s = ds.num_outputs();
  const auto efficient_set = classify_all(ds, tol).efficient();
  const std::vector<std::size_t> efficient(efficient_set.begin(), efficient_set.end());
  const std::size_t e = efficient.size();
  const std::size_t max_face = m + s - 1;
  const auto column = ds.column(o);

  std::optional<OracleProjection> best;
  for (std::uint32_t mask = 1; mask < (1u << e); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_face) continue;
    std::vector<std::size_t> face;
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < e; ++k) ((mask >> k) & 1u ? face : others).push_back(efficient[k]);
    if (!has_supporting_hyperplane(ds, face, others, tol)) continue;

    // min sum(s) s.t. sum_B lambda x = x_o - s^-, sum_B lambda y = y_o + s^+.
    const std::size_t L = face.size();
    LinearProgram lp(L + m + s);
    for (std::size_t q = L; q < L + m + s; ++q) lp.objective[q] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> row(lp.num_variables(), 0.0);
      for (std::size_t k = 0; k < L; ++k) row[k] = ds.input(i, face[k]);
      row[L + i] = 1.0;
      lp.add_row(std::move(row), Relation::equal, column.inputs[i]);
    }
    for (std::size_t r = 0; r < s; ++r) {
      std::vector<double> row(lp.num_variables(), 0.0);
      for (std::size_t k = 0; k < L; ++k) row[k] = ds.output(r, face[k]);
      row[L + m + r] = -1.0;
      lp.add_row(std::move(row), Relation::equal, column.outputs[r]);
    }
    const auto sol = solve_lp(lp, tol);
    if (!sol.optimal()) continue;
    if (best && sol.objective >= best->objective - 1e-12) continue;

    OracleProjection candidate;
    candidate.objective = sol.objective;
    candidate.point = column;
    for (std::size_t i = 0; i < m; ++i) candidate.point.inputs[i] -= sol.primal[L + i];
    for (std::size_t r = 0; r < s; ++r) candidate.point.outputs[r] += sol.primal[L + m + r];
    candidate.face = IndexSet(face.begin(), face.end());
    best = std::move(candidate);
  }
  if (!best) throw SolverError("oracle found no supporting face for DMU '" + ds.name(o) + "'");
  return *best;
}

IndexSet oracle_maximal_set(const DMUDataset& ds, const Activity& point,
                            const ToleranceConfig& tol) {
  check_regime(ds);
  if (!is_pareto_efficient(ds, point, tol)) {
    throw PreconditionError("oracle_maximal_set needs a Pareto-efficient point");
  }
  const std::size_t m = ds.num_inputs();
  const std::size_t s = ds.num_outputs();
  const auto efficient_set = classify_all(ds, tol).efficient();
  const std::vector<std::size_t> efficient(efficient_set.begin(), efficient_set.end());
  const std::size_t L = efficient.size();

  LinearProgram base(L, Sense::maximize);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(L);
    for (std::size_t k = 0; k < L; ++k) row[k] = ds.input(i, efficient[k]);
    base.add_row(std::move(row), Relation::equal, point.inputs[i]);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> row(L);
    for (std::size_t k = 0; k < L; ++k) row[k] = ds.output(r, efficient[k]);
    base.add_row(std::move(row), Relation::equal, point.outputs[r]);
  }

  IndexSet members;
  for (std::size_t k = 0; k < L; ++k) {
    LinearProgram lp = base;
    lp.objective[k] = 1.0;
    const auto sol = solve_lp(lp, tol);
    if (sol.optimal() && sol.objective > kMembershipThreshold) members.insert(efficient[k]);
  }
  return members;
}

}  // namespace dea
