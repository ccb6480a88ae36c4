#include "dea/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "dea/error.hpp"
#include "dea/lp.hpp"

namespace dea {
namespace {

double max_abs(const Activity& a) {
  double best = 0.0;
  for (double v : a.inputs) best = std::max(best, std::abs(v));
  for (double v : a.outputs) best = std::max(best, std::abs(v));
  return best;
}

double efficiency_tolerance(const Activity& point) {
  return kEfficiencyThreshold * std::max(1.0, max_abs(point));
}

template <class Map>
double membership_cutoff(const Map& weights) {
  double largest = 1.0;
  for (const auto& [j, w] : weights) largest = std::max(largest, w);
  return kMembershipThreshold * largest;
}

void check_point_shape(const DMUDataset& ds, const Activity& point) {
  if (point.inputs.size() != ds.num_inputs() || point.outputs.size() != ds.num_outputs()) {
    throw InputError("point dimension does not match the dataset");
  }
}

void check_dmu(const DMUDataset& ds, std::size_t o) {
  if (o >= ds.num_dmus()) throw InputError("DMU index " + std::to_string(o) + " out of range");
}

void check_candidates(const DMUDataset& ds, const IndexSet& candidates) {
  if (candidates.empty()) throw InputError("candidate set is empty");
  if (*candidates.rbegin() >= ds.num_dmus()) throw InputError("candidate index out of range");
}

// Variables: lambda over `refs`, then s^- (m), then s^+ (s).
LinearProgram additive_program(const DMUDataset& ds, const Activity& point,
                               const std::vector<std::size_t>& refs) {
  const std::size_t L = refs.size();
  const std::size_t m = ds.num_inputs();
  const std::size_t s = ds.num_outputs();
  LinearProgram lp(L + m + s, Sense::maximize);
  for (std::size_t k = L; k < L + m + s; ++k) lp.objective[k] = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(lp.num_variables(), 0.0);
    for (std::size_t k = 0; k < L; ++k) row[k] = ds.input(i, refs[k]);
    row[L + i] = 1.0;
    lp.add_row(std::move(row), Relation::equal, point.inputs[i]);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> row(lp.num_variables(), 0.0);
    for (std::size_t k = 0; k < L; ++k) row[k] = ds.output(r, refs[k]);
    row[L + m + r] = -1.0;
    lp.add_row(std::move(row), Relation::equal, point.outputs[r]);
  }
  return lp;
}

LPSolution require_optimal(LPSolution sol, const char* what) {
  if (sol.status == LPStatus::unbounded) {
    throw SolverError(std::string(what) + ": LP unexpectedly unbounded");
  }
  if (sol.status == LPStatus::infeasible) {
    throw SolverError(std::string(what) + ": LP unexpectedly infeasible");
  }
  return sol;
}

std::string format_activity(const Activity& a) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (double v : a.inputs) {
    out << (first ? "" : ", ") << v;
    first = false;
  }
  for (double v : a.outputs) out << ", " << v;
  out << ')';
  return out.str();
}

}  // namespace

std::string_view to_string(EfficiencyStatus status) {
  switch (status) {
    case EfficiencyStatus::extreme_efficient: return "extreme-efficient";
    case EfficiencyStatus::efficient_nonextreme: return "efficient";
    case EfficiencyStatus::inefficient: return "inefficient";
  }
  return "unknown";
}

IndexSet Classification::efficient() const {
  IndexSet out;
  for (std::size_t j = 0; j < status.size(); ++j)
    if (is_efficient(status[j])) out.insert(j);
  return out;
}

IndexSet Classification::extreme_efficient() const {
  IndexSet out;
  for (std::size_t j = 0; j < status.size(); ++j)
    if (status[j] == EfficiencyStatus::extreme_efficient) out.insert(j);
  return out;
}

double Hyperplane::value(const Activity& a) const {
  double z = 0.0;
  for (std::size_t r = 0; r < u.size(); ++r) z += u[r] * a.outputs[r];
  for (std::size_t i = 0; i < v.size(); ++i) z -= v[i] * a.inputs[i];
  return z;
}

double Hyperplane::value(const DMUDataset& ds, std::size_t j) const {
  double z = 0.0;
  for (std::size_t r = 0; r < u.size(); ++r) z += u[r] * ds.output(r, j);
  for (std::size_t i = 0; i < v.size(); ++i) z -= v[i] * ds.input(i, j);
  return z;
}

double hyperplane_scale(const DMUDataset& ds, const Hyperplane& h) {
  double scale = 1.0;
  for (std::size_t j = 0; j < ds.num_dmus(); ++j) {
    double mass = 0.0;
    for (std::size_t r = 0; r < h.u.size(); ++r) mass += std::abs(h.u[r] * ds.output(r, j));
    for (std::size_t i = 0; i < h.v.size(); ++i) mass += std::abs(h.v[i] * ds.input(i, j));
    scale = std::max(scale, mass);
  }
  return scale;
}

IndexSet all_dmus(const DMUDataset& ds) {
  IndexSet out;
  for (std::size_t j = 0; j < ds.num_dmus(); ++j) out.insert(out.end(), j);
  return out;
}

std::optional<double> additive_objective(const DMUDataset& ds, const Activity& point,
                                         const IndexSet& reference, const ToleranceConfig& tol) {
  check_point_shape(ds, point);
  const std::vector<std::size_t> refs(reference.begin(), reference.end());
  const auto sol = solve_lp(additive_program(ds, point, refs), tol);
  if (sol.status == LPStatus::infeasible) return std::nullopt;
  return require_optimal(sol, "additive model").objective;
}

bool is_pareto_efficient(const DMUDataset& ds, const Activity& point, const ToleranceConfig& tol) {
  const auto z = additive_objective(ds, point, all_dmus(ds), tol);
  return z && *z <= efficiency_tolerance(point);
}

Classification classify_all(const DMUDataset& ds, const ToleranceConfig& tol) {
  const std::size_t n = ds.num_dmus();
  Classification c;
  c.status.assign(n, EfficiencyStatus::inefficient);
  c.additive_objective.assign(n, 0.0);
  const IndexSet everyone = all_dmus(ds);
  for (std::size_t o = 0; o < n; ++o) {
    const auto column = ds.column(o);
    const auto z = additive_objective(ds, column, everyone, tol);
    if (!z) throw SolverError("additive model infeasible for DMU '" + ds.name(o) + "'");
    c.additive_objective[o] = *z;
    if (*z <= efficiency_tolerance(column)) c.status[o] = EfficiencyStatus::extreme_efficient;
  }
  const IndexSet efficient = c.efficient();
  for (auto o : efficient) {
    IndexSet others = efficient;
    others.erase(o);
    if (others.empty()) continue;
    const auto column = ds.column(o);
    const auto z = additive_objective(ds, column, others, tol);
    if (z && *z <= efficiency_tolerance(column)) {
      c.status[o] = EfficiencyStatus::efficient_nonextreme;
    }
  }
  return c;
}

ProjectionResult solve_additive(const DMUDataset& ds, std::size_t o, const ToleranceConfig& tol) {
  check_dmu(ds, o);
  const std::size_t n = ds.num_dmus();
  const std::size_t m = ds.num_inputs();
  const std::size_t s = ds.num_outputs();
  const auto column = ds.column(o);
  std::vector<std::size_t> refs(n);
  std::iota(refs.begin(), refs.end(), std::size_t{0});

  const LinearProgram base = additive_program(ds, column, refs);
  const auto first = require_optimal(solve_lp(base, tol), "additive model");
  const double best = first.objective;

  auto positive_lambdas = [&](const std::vector<double>& x) {
    double largest = 1.0;
    for (std::size_t k = 0; k < n; ++k) largest = std::max(largest, x[k]);
    IndexSet out;
    for (std::size_t k = 0; k < n; ++k)
      if (x[k] > kMembershipThreshold * largest) out.insert(k);
    return out;
  };

  // Walk the optimal face: for every DMU not yet positive in a collected
  // optimum, look for an optimum where it is.
  std::vector<std::vector<double>> optima{first.primal};
  IndexSet covered = positive_lambdas(first.primal);
  for (std::size_t k = 0; k < n; ++k) {
    if (covered.contains(k)) continue;
    LinearProgram probe = base;
    std::vector<double> keep(probe.num_variables(), 0.0);
    for (std::size_t q = n; q < n + m + s; ++q) keep[q] = 1.0;
    probe.add_row(std::move(keep), Relation::greater_equal,
                  best - 1e-12 * std::max(1.0, std::abs(best)));
    std::fill(probe.objective.begin(), probe.objective.end(), 0.0);
    probe.objective[k] = 1.0;
    probe.upper_bounds[k] = 1.0;
    const auto sol = solve_lp(probe, tol);
    if (!sol.optimal() || sol.primal[k] <= kMembershipThreshold) continue;
    optima.push_back(sol.primal);
    for (auto q : positive_lambdas(sol.primal)) covered.insert(q);
  }

  std::vector<double> mean(base.num_variables(), 0.0);
  for (const auto& x : optima)
    for (std::size_t q = 0; q < mean.size(); ++q) mean[q] += x[q];
  for (double& v : mean) v = std::max(0.0, v / static_cast<double>(optima.size()));

  ProjectionResult proj;
  proj.mode = ProjectionMode::furthest;
  proj.dmu = o;
  proj.slacks.inputs.assign(mean.begin() + n, mean.begin() + n + m);
  proj.slacks.outputs.assign(mean.begin() + n + m, mean.end());
  proj.point = column;
  for (std::size_t i = 0; i < m; ++i) proj.point.inputs[i] -= proj.slacks.inputs[i];
  for (std::size_t r = 0; r < s; ++r) proj.point.outputs[r] += proj.slacks.outputs[r];
  for (std::size_t k = 0; k < n; ++k) proj.lambda[k] = mean[k];
  proj.objective = std::accumulate(mean.begin() + n, mean.end(), 0.0);
  return proj;
}

double default_big_m(const DMUDataset& ds) {
  return 1e5 * std::max(1.0, ds.max_abs_value());
}

ProjectionResult solve_madd(const DMUDataset& ds, std::size_t o, const IndexSet& candidates,
                            double big_m, const ToleranceConfig& tol, std::size_t node_limit) {
  check_dmu(ds, o);
  check_candidates(ds, candidates);
  if (!(big_m > 0.0) || !std::isfinite(big_m)) throw InputError("big-M must be positive and finite");

  const std::vector<std::size_t> cand(candidates.begin(), candidates.end());
  const std::size_t L = cand.size();
  const std::size_t m = ds.num_inputs();
  const std::size_t s = ds.num_outputs();
  const auto column = ds.column(o);

  // Variable layout.
  const std::size_t lam = 0;
  const std::size_t sminus = L;
  const std::size_t splus = sminus + m;
  const std::size_t vw = splus + s;
  const std::size_t uw = vw + m;
  const std::size_t dev = uw + s;
  const std::size_t bin = dev + L;
  const std::size_t total = bin + L;

  MILPProgram prog;
  LinearProgram& lp = prog.base;
  lp = LinearProgram(total, Sense::minimize);
  for (std::size_t q = sminus; q < vw; ++q) lp.objective[q] = 1.0;
  for (std::size_t q = vw; q < dev; ++q) lp.lower_bounds[q] = 1.0;
  for (std::size_t k = 0; k < L; ++k) {
    lp.upper_bounds[bin + k] = 1.0;
    prog.binary_vars.push_back(bin + k);
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(total, 0.0);
    for (std::size_t k = 0; k < L; ++k) row[lam + k] = ds.input(i, cand[k]);
    row[sminus + i] = 1.0;
    lp.add_row(std::move(row), Relation::equal, column.inputs[i]);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> row(total, 0.0);
    for (std::size_t k = 0; k < L; ++k) row[lam + k] = ds.output(r, cand[k]);
    row[splus + r] = -1.0;
    lp.add_row(std::move(row), Relation::equal, column.outputs[r]);
  }
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<double> row(total, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[vw + i] = ds.input(i, cand[k]);
    for (std::size_t r = 0; r < s; ++r) row[uw + r] = -ds.output(r, cand[k]);
    row[dev + k] = -1.0;
    lp.add_row(std::move(row), Relation::equal, 0.0);
  }
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<double> row(total, 0.0);
    row[dev + k] = 1.0;
    row[bin + k] = -big_m;
    lp.add_row(std::move(row), Relation::less_equal, 0.0);
  }
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<double> row(total, 0.0);
    row[lam + k] = 1.0;
    row[bin + k] = big_m;
    lp.add_row(std::move(row), Relation::less_equal, big_m);
  }

  const auto sol = solve_milp(prog, tol, node_limit);
  if (!sol.optimal()) {
    throw SaturationError("closest-projection model infeasible for DMU '" + ds.name(o) +
                          "' with big-M = " + std::to_string(big_m) +
                          "; M is too small for the data");
  }
  if (!sol.proven) {
    throw NodeLimitError("closest-projection search for DMU '" + ds.name(o) +
                         "' hit the node limit before proving optimality");
  }

  std::vector<bool> released(L);
  for (std::size_t k = 0; k < L; ++k) released[k] = sol.primal[bin + k] > 0.5;

  // Re-derive the hyperplane for the optimal switch pattern with the smallest
  // weight sum, so the reported (v, u) is canonical rather than whichever
  // vertex the search happened to stop at.
  Hyperplane plane;
  std::vector<double> deficit(L, 0.0);
  {
    const std::size_t hv = 0;
    const std::size_t hu = m;
    const std::size_t hd = m + s;
    LinearProgram h(m + s + L, Sense::minimize);
    for (std::size_t q = 0; q < m + s; ++q) {
      h.objective[q] = 1.0;
      h.lower_bounds[q] = 1.0;
    }
    for (std::size_t k = 0; k < L; ++k) {
      h.upper_bounds[hd + k] = released[k] ? big_m : 0.0;
      std::vector<double> row(h.num_variables(), 0.0);
      for (std::size_t i = 0; i < m; ++i) row[hv + i] = ds.input(i, cand[k]);
      for (std::size_t r = 0; r < s; ++r) row[hu + r] = -ds.output(r, cand[k]);
      row[hd + k] = -1.0;
      h.add_row(std::move(row), Relation::equal, 0.0);
    }
    const auto polished = solve_lp(h, tol);
    const std::vector<double>& x = polished.optimal() ? polished.primal : sol.primal;
    const std::size_t ov = polished.optimal() ? hv : vw;
    const std::size_t ou = polished.optimal() ? hu : uw;
    const std::size_t od = polished.optimal() ? hd : dev;
    plane.v.assign(x.begin() + ov, x.begin() + ov + m);
    plane.u.assign(x.begin() + ou, x.begin() + ou + s);
    for (std::size_t k = 0; k < L; ++k) deficit[k] = std::max(0.0, x[od + k]);
  }

  const double limit = (1.0 - kSaturationFraction) * big_m;
  for (std::size_t k = 0; k < L; ++k) {
    const double lambda = sol.primal[lam + k];
    if ((!released[k] && lambda >= limit) || (released[k] && deficit[k] >= limit)) {
      throw SaturationError("big-M = " + std::to_string(big_m) + " saturated at DMU '" +
                            ds.name(cand[k]) + "' while evaluating '" + ds.name(o) +
                            "'; increase M");
    }
  }

  ProjectionResult proj;
  proj.mode = ProjectionMode::closest;
  proj.dmu = o;
  proj.nodes = sol.node_count;
  proj.slacks.inputs.resize(m);
  proj.slacks.outputs.resize(s);
  for (std::size_t i = 0; i < m; ++i) proj.slacks.inputs[i] = std::max(0.0, sol.primal[sminus + i]);
  for (std::size_t r = 0; r < s; ++r) proj.slacks.outputs[r] = std::max(0.0, sol.primal[splus + r]);
  proj.point = column;
  for (std::size_t i = 0; i < m; ++i) proj.point.inputs[i] -= proj.slacks.inputs[i];
  for (std::size_t r = 0; r < s; ++r) proj.point.outputs[r] += proj.slacks.outputs[r];
  for (std::size_t k = 0; k < L; ++k) {
    proj.lambda[cand[k]] = std::max(0.0, sol.primal[lam + k]);
    proj.deficits[cand[k]] = deficit[k];
  }
  proj.hyperplane = std::move(plane);
  proj.objective = std::accumulate(proj.slacks.inputs.begin(), proj.slacks.inputs.end(), 0.0) +
                   std::accumulate(proj.slacks.outputs.begin(), proj.slacks.outputs.end(), 0.0);
  return proj;
}

std::map<std::size_t, double> deficits_on(const DMUDataset& ds, const Hyperplane& h,
                                          const IndexSet& candidates) {
  std::map<std::size_t, double> out;
  for (auto j : candidates) out[j] = -h.value(ds, j);
  return out;
}

IndexSet support_set(const DMUDataset& ds, const ProjectionResult& proj,
                     const IndexSet& candidates) {
  if (!proj.hyperplane && proj.deficits.empty()) {
    throw PreconditionError("projection carries no hyperplane deficits");
  }
  const double cutoff =
      kSupportThreshold * (proj.hyperplane ? hyperplane_scale(ds, *proj.hyperplane) : 1.0);
  IndexSet out;
  for (auto j : candidates) {
    double d = 0.0;
    if (auto it = proj.deficits.find(j); it != proj.deficits.end()) {
      d = it->second;
    } else if (proj.hyperplane) {
      d = -proj.hyperplane->value(ds, j);
    } else {
      continue;
    }
    if (d <= cutoff) out.insert(j);
  }
  return out;
}

ReferenceSetResult solve_mcrs(const DMUDataset& ds, const ProjectionResult& proj,
                              const IndexSet& candidates, const ToleranceConfig& tol) {
  check_point_shape(ds, proj.point);
  check_candidates(ds, candidates);
  if (!is_pareto_efficient(ds, proj.point, tol)) {
    throw PreconditionError("projection " + format_activity(proj.point) +
                            " is not Pareto-efficient");
  }

  const std::vector<std::size_t> cand(candidates.begin(), candidates.end());
  const std::size_t L = cand.size();
  const std::size_t m = ds.num_inputs();
  const std::size_t s = ds.num_outputs();
  const std::size_t mu = 0;
  const std::size_t tv = L;
  const std::size_t vw = 2 * L;
  const std::size_t uw = vw + m;
  const std::size_t eta = uw + s;

  LinearProgram lp(eta + 1, Sense::maximize);
  lp.objective[eta] = 1.0;
  for (std::size_t q = vw; q < eta; ++q) lp.lower_bounds[q] = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(lp.num_variables(), 0.0);
    for (std::size_t k = 0; k < L; ++k) row[mu + k] = ds.input(i, cand[k]);
    lp.add_row(std::move(row), Relation::equal, proj.point.inputs[i]);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> row(lp.num_variables(), 0.0);
    for (std::size_t k = 0; k < L; ++k) row[mu + k] = ds.output(r, cand[k]);
    lp.add_row(std::move(row), Relation::equal, proj.point.outputs[r]);
  }
  {
    std::vector<double> row(lp.num_variables(), 0.0);
    for (std::size_t r = 0; r < s; ++r) row[uw + r] = proj.point.outputs[r];
    for (std::size_t i = 0; i < m; ++i) row[vw + i] = -proj.point.inputs[i];
    lp.add_row(std::move(row), Relation::equal, 0.0);
  }
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<double> row(lp.num_variables(), 0.0);
    for (std::size_t r = 0; r < s; ++r) row[uw + r] = ds.output(r, cand[k]);
    for (std::size_t i = 0; i < m; ++i) row[vw + i] = -ds.input(i, cand[k]);
    row[tv + k] = 1.0;
    lp.add_row(std::move(row), Relation::equal, 0.0);
  }
  // Keep the hyperplane supporting for DMUs outside the candidate set too.
  for (std::size_t j = 0; j < ds.num_dmus(); ++j) {
    if (candidates.count(j)) continue;
    std::vector<double> row(lp.num_variables(), 0.0);
    for (std::size_t r = 0; r < s; ++r) row[uw + r] = ds.output(r, j);
    for (std::size_t i = 0; i < m; ++i) row[vw + i] = -ds.input(i, j);
    lp.add_row(std::move(row), Relation::less_equal, 0.0);
  }
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<double> row(lp.num_variables(), 0.0);
    row[mu + k] = 1.0;
    row[tv + k] = 1.0;
    row[eta] = -1.0;
    lp.add_row(std::move(row), Relation::greater_equal, 0.0);
  }

  const auto sol = solve_lp(lp, tol);
  if (sol.status == LPStatus::infeasible) {
    throw PreconditionError("candidate DMUs cannot represent projection " +
                            format_activity(proj.point));
  }
  if (sol.status == LPStatus::unbounded) {
    throw SolverError("maximal reference set LP unbounded");
  }

  ReferenceSetResult out;
  out.projection = proj;
  out.candidates = candidates;
  out.eta = sol.primal[eta];
  out.hyperplane.v.assign(sol.primal.begin() + vw, sol.primal.begin() + uw);
  out.hyperplane.u.assign(sol.primal.begin() + uw, sol.primal.begin() + eta);
  for (std::size_t k = 0; k < L; ++k) {
    out.mu[cand[k]] = std::max(0.0, sol.primal[mu + k]);
    out.t[cand[k]] = std::max(0.0, sol.primal[tv + k]);
  }
  if (!(out.eta > 0.0)) {
    throw SolverError("maximal reference set LP returned a nonpositive optimum");
  }
  const double cutoff = membership_cutoff(out.mu);
  for (const auto& [j, w] : out.mu)
    if (w > cutoff) out.members.insert(j);
  return out;
}

}  // namespace dea
