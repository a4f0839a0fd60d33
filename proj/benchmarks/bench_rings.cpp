#include <benchmark/benchmark.h>

#include "ppdt/laurent_poly.hpp"
#include "ppdt/moment_jet.hpp"

using namespace ppdt;

namespace {

LaurentPoly dense_poly(long half_width) {
    LaurentPoly p;
    for (long e = -half_width; e <= half_width; ++e)
        p.add_term(e, mpz_class(1 + (e * e) % 7));
    return p;
}

}  // namespace

static void bm_laurent_mul(benchmark::State& state) {
    const LaurentPoly a = dense_poly(state.range(0));
    const LaurentPoly b = dense_poly(state.range(0));
    for (auto _ : state) {
        LaurentPoly c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_laurent_mul)->Arg(8)->Arg(64)->Arg(256);

static void bm_laurent_monomial_addmul(benchmark::State& state) {
    const LaurentPoly a = dense_poly(state.range(0));
    const LaurentPoly w = LaurentPoly::monomial(3);
    for (auto _ : state) {
        LaurentPoly acc = a;
        acc.add_mul(w, a);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_laurent_monomial_addmul)->Arg(64)->Arg(512);

static void bm_jet_mul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    MomentJet a = MomentJet::zero(order);
    MomentJet b = MomentJet::zero(order);
    for (int j = 0; j <= order; ++j) {
        a[j] = mpz_class("123456789123456789") * (j + 1);
        b[j] = mpz_class("987654321987654321") * (2 * j + 1);
    }
    for (auto _ : state) {
        MomentJet c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_jet_mul)->Arg(2)->Arg(8)->Arg(16);

static void bm_jet_of_exponent(benchmark::State& state) {
    for (auto _ : state) {
        MomentJet j = MomentJet::of_exponent(-12345, 8);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(bm_jet_of_exponent);

BENCHMARK_MAIN();
