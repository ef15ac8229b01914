#include <benchmark/benchmark.h>

#include <seqspan/field.hpp>

using namespace seqspan;

static void BM_Multiply(benchmark::State& state) {
    const auto tw = FieldTower::make(static_cast<unsigned>(state.range(0)),
                                     static_cast<unsigned>(state.range(1)));
    FieldElement x = tw.alpha();
    for (auto _ : state) {
        x = tw.mul(x, tw.alpha());
        benchmark::DoNotOptimize(x.bits);
    }
}
BENCHMARK(BM_Multiply)->Args({3, 2})->Args({8, 2});

static void BM_Pow(benchmark::State& state) {
    const auto tw = FieldTower::make(8, 2);
    int64_t e = 1;
    for (auto _ : state) {
        const auto y = tw.pow(tw.alpha(), e);
        benchmark::DoNotOptimize(y.bits);
        e = (e * 7 + 3) & 0x7fffffff;
    }
}
BENCHMARK(BM_Pow);

static void BM_TraceToSubfield(benchmark::State& state) {
    const auto tw = FieldTower::make(3, 2);
    FieldElement x = tw.alpha();
    for (auto _ : state) {
        const auto t = tw.trace_to(x, 3);
        benchmark::DoNotOptimize(t.bits);
        x = tw.mul(x, tw.alpha());
    }
}
BENCHMARK(BM_TraceToSubfield);

// n = 12 resolves through the full log table, n = 22 through baby-step
// giant-step.
static void BM_DiscreteLog(benchmark::State& state) {
    const auto tw = FieldTower::make(static_cast<unsigned>(state.range(0)),
                                     static_cast<unsigned>(state.range(1)));
    FieldElement x = tw.alpha();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tw.discrete_log(x));
        x = tw.mul(x, tw.alpha());
        if (x.bits == 0 || x.bits == 1) x = tw.alpha();
    }
}
BENCHMARK(BM_DiscreteLog)->Args({3, 2})->Args({11, 1});

BENCHMARK_MAIN();
