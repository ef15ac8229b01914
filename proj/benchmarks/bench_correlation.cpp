#include <benchmark/benchmark.h>

#include <seqspan/correlation.hpp>
#include <seqspan/family.hpp>
#include <seqspan/idealseq.hpp>
#include <seqspan/parallel.hpp>

using namespace seqspan;

namespace {

FamilyParams params_32() {
    return FamilyParams::make(3, 2, IndexSet::from_leaders(3, {3}), 1);
}

}  // namespace

static void BM_SingleShift(benchmark::State& state) {
    const auto params = params_32();
    const auto a = generate_sequence(params, 1);
    const auto b = generate_sequence(params, 2);
    uint64_t tau = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cross_correlation(a, b, tau));
        tau = (tau + 1) % a.period();
    }
}
BENCHMARK(BM_SingleShift);

static void BM_AutocorrelationProfile(benchmark::State& state) {
    const auto s = generate_sequence(params_32(), 0);
    for (auto _ : state) {
        const auto profile = autocorrelation_profile(s);
        benchmark::DoNotOptimize(profile.data());
    }
}
BENCHMARK(BM_AutocorrelationProfile);

// Full 16-member spectrum at period 255; thread count is the argument.
static void BM_FamilySpectrum(benchmark::State& state) {
    const auto params = FamilyParams::make(2, 2, IndexSet::from_leaders(2, {1}), 1);
    const auto family = generate_family(params, resolve_threads(0));
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        const auto spec = family_spectrum(family, threads, params.digest());
        benchmark::DoNotOptimize(spec.r_max);
    }
}
BENCHMARK(BM_FamilySpectrum)->Arg(1)->Arg(0);  // 0 = all cores

BENCHMARK_MAIN();
