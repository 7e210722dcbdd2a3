#include <benchmark/benchmark.h>

#include "hetnet/montecarlo.hpp"

using namespace hetnet;

static void BM_OutageTrials(benchmark::State& st) {
  OutageScenario s;
  s.zeta_center = s.zeta_edge = st.range(0) / 10.0;
  OutageOptions o;
  o.trials = 2000;
  o.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(simulate_outage(s, o).ccu_outage[0].mean);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(o.trials));
}
BENCHMARK(BM_OutageTrials)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_TemporalCells(benchmark::State& st) {
  ScenarioConfig c;
  const auto sol = solve_fixed_point(c);
  TemporalOptions o;
  o.cells = 20;
  o.sim_minutes = 100;
  o.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(simulate_temporal(c, sol, o).activity_center.mean);
  st.SetItemsProcessed(st.iterations() * o.cells);
}
BENCHMARK(BM_TemporalCells)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
