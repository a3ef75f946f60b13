#include <benchmark/benchmark.h>

#include "lcmq/bounds.hpp"
#include "lcmq/poly.hpp"
#include "lcmq/sweep.hpp"

using namespace lcmq;

static void BM_AlphaClosed(benchmark::State& state) {
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_closed(3, k));
}
BENCHMARK(BM_AlphaClosed)->Arg(5)->Arg(15)->Arg(25);

static void BM_AlphaInterp(benchmark::State& state) {
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_interp(3, k));
}
BENCHMARK(BM_AlphaInterp)->Arg(5)->Arg(15)->Arg(25);

static void BM_BezoutGeneral(benchmark::State& state) {
  const QuadPoly P = build_P(3, state.range(0));
  const QuadPoly Q = conj(P);
  for (auto _ : state) benchmark::DoNotOptimize(bezout_general(P, Q));
}
BENCHMARK(BM_BezoutGeneral)->Arg(5)->Arg(15)->Arg(25);

static void BM_BezoutCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bezout_certificate(3, state.range(0)));
}
BENCHMARK(BM_BezoutCertificate)->Arg(5)->Arg(15);

static void BM_VerifyDivisor(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_t7_divisor(2, n / 2, n));
}
BENCHMARK(BM_VerifyDivisor)->Arg(60)->Arg(200);

static void BM_BoundReport(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(bound_report(2, n / 2, n));
}
BENCHMARK(BM_BoundReport)->Arg(60)->Arg(200);

// One full column of m values, maintained incrementally.
static void BM_SweepColumn(benchmark::State& state) {
  const long n = state.range(0);
  const LogFactorials lf(n);
  std::vector<long> ms(static_cast<std::size_t>(n));
  for (long m = 1; m <= n; ++m) ms[static_cast<std::size_t>(m - 1)] = m;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_column(2, n, ms, lf));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SweepColumn)->Arg(60)->Arg(200);

static void BM_RunSweep(benchmark::State& state) {
  SweepConfig config;
  config.c_max = 2;
  config.n_max = 60;
  config.parallelism = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
}
BENCHMARK(BM_RunSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
