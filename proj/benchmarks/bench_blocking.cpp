#include <benchmark/benchmark.h>

#include "hetnet/blocking.hpp"

using namespace hetnet;

static void BM_ErlangB(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(erlang_b(LossSystem(n, 0.9 * n)));
}
BENCHMARK(BM_ErlangB)->Arg(10)->Arg(50)->Arg(200);

static void BM_Enumeration2D(benchmark::State& st) {
  const MultiClassLossSystem sys{static_cast<double>(st.range(0)), {1.37, 2.21}, {12.0, 6.0}};
  for (auto _ : st) benchmark::DoNotOptimize(blocking_2d(sys).edge);
}
BENCHMARK(BM_Enumeration2D)->Arg(50)->Arg(200);

static void BM_KaufmanRoberts(benchmark::State& st) {
  const MultiClassLossSystem sys{50, {1.37, 2.21}, {12.0, 6.0}};
  const int res = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kaufman_roberts(sys, res).edge);
}
BENCHMARK(BM_KaufmanRoberts)->Arg(1)->Arg(100);

static void BM_NetworkBlocking(benchmark::State& st) {
  ScenarioConfig c;
  if (st.range(0) == 1) c.policy = CoChannelSpectrum{};
  const auto sol = solve_fixed_point(c);
  for (auto _ : st) benchmark::DoNotOptimize(network_blocking(c, sol).b_network);
}
BENCHMARK(BM_NetworkBlocking)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
