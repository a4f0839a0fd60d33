#include <benchmark/benchmark.h>

#include "ppdt/expand.hpp"

using namespace ppdt;

static void bm_expand_laurent(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = expand_m_delta_laurent(0, n_max);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(n_max);
}
BENCHMARK(bm_expand_laurent)->Arg(16)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond)->Complexity();

static void bm_expand_jet(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = expand_m_delta_jet(0, n_max, 8);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(n_max);
}
BENCHMARK(bm_expand_jet)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->Complexity();

static void bm_expand_jet_float(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = expand_m_delta_jet_float(0, n_max, 8);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_expand_jet_float)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void bm_expand_macmahon(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = expand_macmahon(n_max);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_expand_macmahon)->Arg(400)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);

static void bm_second_moment_series(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = second_moment_series(n_max);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_second_moment_series)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);
