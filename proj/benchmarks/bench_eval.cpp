#include <benchmark/benchmark.h>

#include "hyperlog/explicit_log.hpp"
#include "hyperlog/hyper_eval.hpp"

using namespace hyperlog;

static void BM_Pfq3F2(benchmark::State& state) {
  const mpfr_prec_t prec = state.range(0);
  const std::vector<Rational> up = {Rational(1), Rational(1),
                                    make_rational(1, 2)};
  const std::vector<Rational> lo = {make_rational(7, 6),
                                    make_rational(11, 6)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfq(up, lo, make_rational(1, 2), prec));
  }
}
BENCHMARK(BM_Pfq3F2)->Arg(64)->Arg(192)->Arg(512);

static void BM_ExplicitResidual(benchmark::State& state) {
  const mpfr_prec_t prec = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(explicit_residual(make_rational(1, 2), prec));
  }
}
BENCHMARK(BM_ExplicitResidual)->Arg(96)->Arg(192);

static void BM_RationalPower(benchmark::State& state) {
  Ball base = Ball::from_long(2, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rational_power(base, make_rational(2, 3)));
  }
}
BENCHMARK(BM_RationalPower)->Arg(128)->Arg(1024);

BENCHMARK_MAIN();
