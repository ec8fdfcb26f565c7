#include <benchmark/benchmark.h>

#include "slabtrans/monte_carlo.hpp"

using namespace slabtrans;

static void BM_SampleScatter(benchmark::State& state) {
  double u = 0.0, mu = 0.5;
  for (auto _ : state) {
    u += 0.618033988749895;
    if (u >= 1.0) u -= 1.0;
    mu = mc::sample_scatter(mu, 1.0 / 3.0, u);
    benchmark::DoNotOptimize(mu);
  }
}
BENCHMARK(BM_SampleScatter);

static void BM_Run(benchmark::State& state) {
  mc::Config cfg;
  cfg.thickness = 10.0;
  cfg.anisotropy = 0.0;
  cfg.mu0 = 1.0;
  cfg.n_particles = 100000;
  cfg.seed = 1;
  cfg.n_workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = mc::run(cfg);
    benchmark::DoNotOptimize(res.transmitted_count);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(cfg.n_particles));
}
BENCHMARK(BM_Run)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
