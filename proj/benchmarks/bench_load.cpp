#include <benchmark/benchmark.h>

#include "hetnet/load.hpp"

using namespace hetnet;

static void BM_ActivityFactor(benchmark::State& st) {
  double x = 0.01;
  for (auto _ : st) {
    benchmark::DoNotOptimize(activity_factor(x));
    x = x < 10.0 ? x * 1.05 : 0.01;
  }
}
BENCHMARK(BM_ActivityFactor);

static void BM_FixedPoint(benchmark::State& st) {
  ScenarioConfig c;
  if (st.range(0) == 1) c.policy = CoChannelSpectrum{};
  for (auto _ : st) benchmark::DoNotOptimize(solve_fixed_point(c).zeta_center);
}
BENCHMARK(BM_FixedPoint)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
