#include <benchmark/benchmark.h>

#include "fuzzyseq/detail/rng.hpp"
#include "fuzzyseq/fuzzy_number.hpp"

using namespace fuzzyseq;

namespace {

std::vector<std::pair<FuzzyNumber, FuzzyNumber>> sample_pairs(std::size_t count) {
    SplitMix64 rng(42);
    std::vector<std::pair<FuzzyNumber, FuzzyNumber>> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        pairs.emplace_back(random_fuzzy_number(rng), random_fuzzy_number(rng));
    return pairs;
}

void BM_metric_exact(benchmark::State& state) {
    const auto pairs = sample_pairs(256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [u, v] = pairs[i++ & 255];
        benchmark::DoNotOptimize(metric_d(u, v));
    }
}
BENCHMARK(BM_metric_exact);

void BM_metric_grid_oracle(benchmark::State& state) {
    const auto pairs = sample_pairs(64);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [u, v] = pairs[i++ & 63];
        benchmark::DoNotOptimize(metric_d_grid_oracle(u, v, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_metric_grid_oracle)->Arg(101)->Arg(1001)->Arg(100001);

void BM_fuzzy_add(benchmark::State& state) {
    const auto pairs = sample_pairs(256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [u, v] = pairs[i++ & 255];
        benchmark::DoNotOptimize(u + v);
    }
}
BENCHMARK(BM_fuzzy_add);

} // namespace

BENCHMARK_MAIN();
