#include <benchmark/benchmark.h>

#include "hyperlog/regulator.hpp"

using namespace hyperlog;

static const RecurrenceParams kP{make_rational(1, 2), make_rational(1, 6),
                                 make_rational(5, 6)};

static void BM_EDet(benchmark::State& state) {
  const long r = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(e_det(kP, r));
  }
}
BENCHMARK(BM_EDet)->Arg(5)->Arg(20)->Arg(50);

static void BM_DetScan(benchmark::State& state) {
  const long rmax = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_scan(kP, rmax));
  }
}
BENCHMARK(BM_DetScan)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
