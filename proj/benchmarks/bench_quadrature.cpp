#include <benchmark/benchmark.h>

#include <cmath>

#include "slabtrans/quadrature.hpp"

using namespace slabtrans;

static void BM_SmoothIntegrand(benchmark::State& state) {
  const Quadrature q{1e-10, 1e-10, 128, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto r = integrate([](double x) { return std::exp(-x) * std::cos(8.0 * x); },
                       0.0, 3.0, q);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SmoothIntegrand)->Arg(31)->Arg(63);

static void BM_LogSingularity(benchmark::State& state) {
  const Quadrature q{1e-10, 1e-10, 128, 31};
  for (auto _ : state) {
    auto r = integrate([](double x) { return std::log(x); }, 0.0, 1.0, q);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_LogSingularity);

static void BM_PrincipalValue(benchmark::State& state) {
  const Quadrature q{1e-10, 1e-10, 128, 31};
  for (auto _ : state) {
    auto r = integrate_pv([](double mu) { return std::cos(mu); }, 0.0, 1.0, 0.37, q);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_PrincipalValue);

static void BM_EndpointSingular(benchmark::State& state) {
  const Quadrature q{1e-10, 1e-10, 200, 31};
  for (auto _ : state) {
    auto r = integrate_endpoint_singular(
        [](double, double omx) {
          const double l = std::log(omx);
          return 1.0 / (omx * l * l);
        },
        q, 1.0 - 1.0 / std::exp(1.0));
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_EndpointSingular);

BENCHMARK_MAIN();
