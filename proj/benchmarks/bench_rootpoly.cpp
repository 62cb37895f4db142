#include <benchmark/benchmark.h>

#include "rootpoly/enumeration.hpp"
#include "rootpoly/hull_oracle.hpp"

using namespace rootpoly;

static void BM_BuildE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem::build({'E', 8}));
}
BENCHMARK(BM_BuildE8)->Unit(benchmark::kMillisecond);

static void BM_FPolynomialE8(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({'E', 8});
  for (auto _ : state) benchmark::DoNotOptimize(f_polynomial(rs));
}
BENCHMARK(BM_FPolynomialE8)->Unit(benchmark::kMillisecond);

static void BM_FaceCensusE8(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({'E', 8});
  for (auto _ : state) benchmark::DoNotOptimize(all_standard_parabolic_faces(rs));
}
BENCHMARK(BM_FaceCensusE8)->Unit(benchmark::kMillisecond);

static void BM_HullFacetsF4(benchmark::State& state) {
  const auto pts = root_points(RootSystem::build({'F', 4}));
  HullOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hull_facets(pts, opts));
}
BENCHMARK(BM_HullFacetsF4)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_CrossValidateB4(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({'B', 4});
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(rs));
}
BENCHMARK(BM_CrossValidateB4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
