#include <benchmark/benchmark.h>

#include "hetnet/interference.hpp"
#include "hetnet/numerics/special_functions.hpp"

using namespace hetnet;

static void BM_KernelHClosedForm(benchmark::State& st) {
  const RegionThreshold r(0.707);
  double beta = 1.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernel_H(beta, 0.5, r, KernelMethod::kClosedForm));
    beta = beta < 1e3 ? beta * 1.01 : 1e-3;
  }
}
BENCHMARK(BM_KernelHClosedForm);

static void BM_KernelHQuadrature(benchmark::State& st) {
  const RegionThreshold r(0.707);
  const double delta = st.range(0) / 100.0;
  double beta = 1.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernel_H(beta, delta, r, KernelMethod::kQuadrature));
    beta = beta < 1e3 ? beta * 1.01 : 1e-3;
  }
}
BENCHMARK(BM_KernelHQuadrature)->Arg(50)->Arg(67);

static void BM_IncompleteGamma(benchmark::State& st) {
  double x = 0.01;
  for (auto _ : st) {
    benchmark::DoNotOptimize(numerics::gamma_p(4.5, x));
    x = x < 40.0 ? x * 1.05 : 0.01;
  }
}
BENCHMARK(BM_IncompleteGamma);

BENCHMARK_MAIN();
