#include <benchmark/benchmark.h>

#include "hetnet/coverage.hpp"

using namespace hetnet;

static CoverageInputs edge(double beta) {
  CoverageInputs in;
  in.beta = beta;
  in.zeta = 0.5;
  return in;
}

static void BM_EdgeSeries(benchmark::State& st) {
  const auto in = edge(st.range(0) / 10.0);
  for (auto _ : st) benchmark::DoNotOptimize(cov_ceu_ssa_series(in).value);
}
BENCHMARK(BM_EdgeSeries)->Arg(1)->Arg(10)->Arg(100);

static void BM_EdgeIntegral(benchmark::State& st) {
  const auto in = edge(st.range(0) / 10.0);
  for (auto _ : st) benchmark::DoNotOptimize(cov_ceu_ssa_integral(in));
}
BENCHMARK(BM_EdgeIntegral)->Arg(1)->Arg(10)->Arg(100);

static void BM_CenterClosedForm(benchmark::State& st) {
  auto in = edge(1.0);
  in.lambda_f_eff = 1.25e-5;
  for (auto _ : st) benchmark::DoNotOptimize(cov_ccu_ssa(in));
}
BENCHMARK(BM_CenterClosedForm);

BENCHMARK_MAIN();
