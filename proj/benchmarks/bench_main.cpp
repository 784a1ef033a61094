#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "logsurf/discrepancy.hpp"
#include "logsurf/linalg.hpp"
#include "logsurf/mmp.hpp"

using namespace logsurf;

namespace {

// cone((1,0), (-q, n)) resolves to the Hirzebruch-Jung chain of n/q.
ToricSurface cyclic_quotient(long n, long q) { return config_from_fan(Fan2D::from_rays({{1, 0}, {-q, n}, {0, -1}})); }

ToricSurface fan_with_rays(std::size_t count) {
  const std::vector<Ray> all{{1, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  std::vector<Ray> pick;
  // Keep a complete fan: the four axis rays first, then fill in.
  for (const Ray& r : std::vector<Ray>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}) pick.push_back(r);
  for (const Ray& r : all) {
    if (pick.size() >= count) break;
    if (std::find(pick.begin(), pick.end(), r) == pick.end()) pick.push_back(r);
  }
  return config_from_fan(Fan2D::from_rays(pick));
}

void BM_LogPullbackChain(benchmark::State& state) {
  const long n = state.range(0);
  const auto ts = cyclic_quotient(n, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(log_pullback(ts.model, ts.boundary));
  state.counters["contracted"] = static_cast<double>(ts.model.contracted.size());
}
BENCHMARK(BM_LogPullbackChain)->Arg(5)->Arg(9)->Arg(17)->Arg(33);

void BM_ClassifyChain(benchmark::State& state) {
  const auto ts = cyclic_quotient(state.range(0), state.range(0) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(classify(ts.model, {}));
}
BENCHMARK(BM_ClassifyChain)->Arg(5)->Arg(9)->Arg(17);

void BM_RunMMPToric(benchmark::State& state) {
  const auto ts = fan_with_rays(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_mmp(ts.model, {}, ts.universe, false));
}
BENCHMARK(BM_RunMMPToric)->DenseRange(4, 10, 2);

void BM_ExtremalGenerators(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<QVector> gens(2 * dim, QVector(dim));
  for (auto& g : gens) {
    for (auto& x : g) x = Rational(d(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(extremal_generators(gens));
}
BENCHMARK(BM_ExtremalGenerators)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
