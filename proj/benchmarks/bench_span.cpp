#include <benchmark/benchmark.h>

#include <memory>

#include <seqspan/family.hpp>
#include <seqspan/idealseq.hpp>
#include <seqspan/parallel.hpp>
#include <seqspan/span.hpp>

using namespace seqspan;

namespace {

FamilyParams params_32() {
    return FamilyParams::make(3, 2, IndexSet::from_leaders(3, {3}), 1);
}

}  // namespace

static void BM_GenerateSequence(benchmark::State& state) {
    const auto params = params_32();
    uint64_t h = 0;
    for (auto _ : state) {
        const auto s = generate_sequence(params, h);
        benchmark::DoNotOptimize(s.ones_count());
        h = (h + 1) % params.family_size();
    }
}
BENCHMARK(BM_GenerateSequence);

static void BM_GenerateFamily(benchmark::State& state) {
    const auto params = FamilyParams::make(2, 2, IndexSet::from_leaders(2, {1}), 1);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        const auto family = generate_family(params, threads);
        benchmark::DoNotOptimize(family.data());
    }
}
BENCHMARK(BM_GenerateFamily)->Arg(1)->Arg(0);  // 0 = all cores

static void BM_BerlekampMassey4095(benchmark::State& state) {
    const auto s = generate_sequence(params_32(), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(berlekamp_massey(s).span);
    }
}
BENCHMARK(BM_BerlekampMassey4095);

static void BM_BerlekampMassey16383(benchmark::State& state) {
    const auto tower = std::make_shared<const FieldTower>(FieldTower::make(7, 1));
    const auto s = generate_section4_sequence(tower, LegendreSpec::make(7, 1, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(berlekamp_massey(s).span);
    }
}
BENCHMARK(BM_BerlekampMassey16383);

static void BM_PredictedSpan(benchmark::State& state) {
    const auto params = params_32();
    uint64_t h = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(predicted_span(params, h));
        h = h % (params.family_size() - 1) + 1;
    }
}
BENCHMARK(BM_PredictedSpan);

BENCHMARK_MAIN();
