#include <benchmark/benchmark.h>

#include <random>

#include "dea/fixtures.hpp"
#include "dea/lp.hpp"
#include "dea/milp.hpp"
#include "dea/models.hpp"
#include "dea/pipeline.hpp"
#include "support/instances.hpp"

namespace {

using namespace dea;

// Dense random LP: n variables, n/2 <= rows, all within a box.
LinearProgram random_lp(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> coef(0.0, 10.0);
  LinearProgram p(n, Sense::maximize);
  for (auto& c : p.objective) c = coef(rng);
  for (std::size_t i = 0; i < n / 2; ++i) {
    std::vector<double> a(n);
    for (auto& v : a) v = coef(rng);
    p.add_row(std::move(a), Relation::less_equal, 100.0);
  }
  return p;
}

void BM_SolveLp(benchmark::State& state) {
  const auto p = random_lp(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(p));
}
BENCHMARK(BM_SolveLp)->Arg(10)->Arg(40)->Arg(160);

void BM_SolveMilp(benchmark::State& state) {
  std::mt19937_64 rng(testing::kMilpSeed);
  const auto p = testing::random_milp(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_milp(p));
}
BENCHMARK(BM_SolveMilp)->Arg(4)->Arg(10);

void BM_ClosestProjection(benchmark::State& state) {
  const auto ds = fixtures::nine_dmu_example();
  const auto se = classify_all(ds).efficient();
  const double m = default_big_m(ds);
  for (auto _ : state) benchmark::DoNotOptimize(solve_madd(ds, 6, se, m));
}
BENCHMARK(BM_ClosestProjection);

void BM_AnalyzeAll(benchmark::State& state) {
  const auto ds = fixtures::nine_dmu_example();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_all(ds, AnalysisConfig{}));
}
BENCHMARK(BM_AnalyzeAll);

}  // namespace

BENCHMARK_MAIN();
