#include <benchmark/benchmark.h>

#include <sstream>

#include "hyperlog/criteria.hpp"
#include "hyperlog/scan.hpp"

using namespace hyperlog;

static void BM_Classify(benchmark::State& state) {
  HGParams p{make_rational(1, 2), make_rational(7, 6), make_rational(11, 6)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(p));
  }
}
BENCHMARK(BM_Classify);

static void BM_ClassifyLargeModulus(benchmark::State& state) {
  const long den = state.range(0);
  HGParams p{make_rational(1, den), make_rational(den - 1, den),
             make_rational(1, 2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(p));
  }
}
BENCHMARK(BM_ClassifyLargeModulus)->Arg(30)->Arg(210)->Arg(2310);

static void BM_ScanDenominator(benchmark::State& state) {
  ScanConfig cfg;
  cfg.max_denominator = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::ostringstream os;
    benchmark::DoNotOptimize(run_scan(cfg, os));
  }
}
BENCHMARK(BM_ScanDenominator)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
