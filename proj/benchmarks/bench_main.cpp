#include <benchmark/benchmark.h>

#include "fibmod5/bernoulli.hpp"
#include "fibmod5/chebyshev.hpp"
#include "fibmod5/identity_catalog.hpp"
#include "fibmod5/numeric_verify.hpp"
#include "fibmod5/series.hpp"

using namespace fibmod5;

static void BM_SequenceWindow(benchmark::State& state) {
  const Index span = state.range(0);
  for (auto _ : state) {
    SequenceWindow w(GibonacciParams{3, 7}, -span, span);
    benchmark::DoNotOptimize(w[span]);
  }
  state.SetItemsProcessed(state.iterations() * (2 * span + 1));
}
BENCHMARK(BM_SequenceWindow)->Arg(100)->Arg(1000);

static void BM_CachedFibonacci(benchmark::State& state) {
  Index n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fib(n % 2000 - 1000));
    ++n;
  }
}
BENCHMARK(BM_CachedFibonacci);

static void BM_GoldenPower(benchmark::State& state) {
  const Index e = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(power(GoldenElement::alpha(), e));
}
BENCHMARK(BM_GoldenPower)->Arg(64)->Arg(1024);

static void BM_ChebyshevExplicit(benchmark::State& state) {
  const ExactScalar x = GoldenFraction(-GoldenElement::alpha(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cheb_t_explicit(state.range(0), x));
}
BENCHMARK(BM_ChebyshevExplicit)->Arg(10)->Arg(30);

static void BM_VerifyFamily(benchmark::State& state) {
  const auto& f = *find_family("th11-lucas");
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_family(f, {1, state.range(0)}, {-50, 50}, std::nullopt, workers));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 101);
}
BENCHMARK(BM_VerifyFamily)->Args({50, 1})->Args({200, 1})->Args({200, 2})->Unit(benchmark::kMillisecond);

static void BM_BernoulliPoly(benchmark::State& state) {
  const Rational t = make_rational(7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_poly(state.range(0), t));
}
BENCHMARK(BM_BernoulliPoly)->Arg(21)->Arg(81);

static void BM_SeriesVerify(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_verify({SeriesFamily::series1_ber, 2}, state.range(0), 1e-10));
  }
}
BENCHMARK(BM_SeriesVerify)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_NumericSuite(benchmark::State& state) {
  NumericSweep sweep;
  sweep.n_range = {1, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(run_numeric_suite(sweep));
}
BENCHMARK(BM_NumericSuite)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
