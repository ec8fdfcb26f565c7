#include <benchmark/benchmark.h>

#include "slabtrans/special_functions.hpp"

using namespace slabtrans;

static void BM_XDirect(benchmark::State& state) {
  const XFunction x{Albedo(1.0), XFunction::Options{0, {}}};
  double mu = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.direct(mu));
    mu += 0.001;
    if (mu > 1.0) mu = 0.0;
  }
}
BENCHMARK(BM_XDirect);

static void BM_XCached(benchmark::State& state) {
  const XFunction x{Albedo(1.0)};
  double mu = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.at(mu));
    mu += 0.001;
    if (mu > 1.0) mu = 0.0;
  }
}
BENCHMARK(BM_XCached);

static void BM_XCacheBuild(benchmark::State& state) {
  for (auto _ : state) {
    const XFunction x{Albedo(1.0),
                      XFunction::Options{static_cast<int>(state.range(0)), {}}};
    benchmark::DoNotOptimize(x.at(0.5));
  }
}
BENCHMARK(BM_XCacheBuild)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_GammaMoments(benchmark::State& state) {
  const XFunction x{Albedo(1.0)};
  for (auto _ : state) {
    auto m = gamma_moments(x);
    benchmark::DoNotOptimize(m.gamma1);
  }
}
BENCHMARK(BM_GammaMoments)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
