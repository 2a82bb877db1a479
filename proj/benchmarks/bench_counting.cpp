#include <benchmark/benchmark.h>

#include "fuzzyseq/analysis.hpp"
#include "fuzzyseq/density.hpp"

using namespace fuzzyseq;

namespace {

void BM_prefix_count_powers(benchmark::State& state) {
    const IndexSet cubes = IndexSet::powers(3);
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cubes.prefix_count(n));
}
BENCHMARK(BM_prefix_count_powers)->Arg(1'000'000)->Arg(1'000'000'000'000ULL);

void BM_prefix_count_union(benchmark::State& state) {
    const IndexSet u = IndexSet::union_of(IndexSet::multiples(12), IndexSet::powers(2));
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(u.prefix_count(n));
}
BENCHMARK(BM_prefix_count_union)->Arg(1'000'000)->Arg(1'000'000'000'000ULL);

void BM_exceed_closed_form(benchmark::State& state) {
    const FuzzySequence w = preset_sequence("thm3.15");
    const FuzzyNumber zero = FuzzyNumber::zero();
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(w.exceed_count(zero, 1.0, n));
}
BENCHMARK(BM_exceed_closed_form)->Arg(100'000'000)->Arg(10'000'000'000ULL);

void BM_exceed_custom_scan(benchmark::State& state) {
    const FuzzySequence seq = FuzzySequence::custom([](std::uint64_t k) {
        return k % 2 == 1 ? FuzzyNumber::triangular(-3, -2, -1) : FuzzyNumber::triangular(1, 2, 3);
    });
    const FuzzyNumber target = FuzzyNumber::triangular(1, 2, 3);
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(seq.exceed_count(target, 1.0, n));
}
BENCHMARK(BM_exceed_custom_scan)->Arg(10'000)->Arg(100'000);

void BM_density_run(benchmark::State& state) {
    const DensityQuery query{IndexSet::powers(3), Modulus::log1p(), 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(density(query, {}));
}
BENCHMARK(BM_density_run);

void BM_cesaro_series_closed_form(benchmark::State& state) {
    const CesaroQuery query{preset_sequence("thm3.15"), FuzzyNumber::zero(), Modulus::identity(), 0.2};
    AnalysisOptions opts;
    opts.schedule = {1000, 3.1622776601683795, 11}; // to 1e8
    for (auto _ : state) benchmark::DoNotOptimize(cesaro_series(query, opts.schedule));
}
BENCHMARK(BM_cesaro_series_closed_form);

} // namespace

BENCHMARK_MAIN();
