#include <benchmark/benchmark.h>

#include "ppdt/partitions.hpp"
#include "ppdt/sampler.hpp"

using namespace ppdt;

static void bm_draw_once(benchmark::State& state) {
    SamplerConfig cfg;
    cfg.n = state.range(0);
    cfg.target_accepted = 1;
    const FactorModel model(cfg);
    RngStream rng(42, 0);
    for (auto _ : state) {
        SampleRecord r = model.draw_once(rng);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_draw_once)->Arg(100)->Arg(10000)->Arg(1000000);

static void bm_sample_conditioned_n100(benchmark::State& state) {
    SamplerConfig cfg;
    cfg.n = 100;
    cfg.target_accepted = 1000;
    for (auto _ : state) {
        auto recs = sample_conditioned(cfg);
        benchmark::DoNotOptimize(recs);
    }
}
BENCHMARK(bm_sample_conditioned_n100)->Unit(benchmark::kMillisecond);

static void bm_enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        enumerate(n, [&](const PlanePartition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bm_enumerate)->Arg(8)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
