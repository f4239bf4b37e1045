#include <benchmark/benchmark.h>

#include "polignac/gap_census.hpp"
#include "polignac/sieve.hpp"

namespace {

polignac::SieveOptions options(std::int64_t segment, std::int64_t workers) {
    polignac::SieveOptions o;
    o.segment_size = static_cast<std::uint64_t>(segment);
    o.workers = static_cast<unsigned>(workers);
    return o;
}

void BM_CountPrimes(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    const auto opts = options(state.range(1), 1);
    for (auto _ : state) benchmark::DoNotOptimize(polignac::count_primes(0, hi, opts));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountPrimes)
    ->ArgsProduct({{1'000'000, 100'000'000}, {1 << 15, 1 << 18, 1 << 21}})
    ->Unit(benchmark::kMillisecond);

void BM_GapCensus(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    const auto opts = options(polignac::kDefaultSegmentSize, state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(polignac::gap_census(x, opts));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GapCensus)
    ->ArgsProduct({{10'000'000, 100'000'000}, {1, 2, 8}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

// High window: base-prime setup dominates for short segments.
void BM_HighWindow(benchmark::State& state) {
    const std::uint64_t lo = 9'000'000'000ULL;
    const auto opts = options(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(polignac::count_primes(lo, lo + 10'000'000, opts));
}
BENCHMARK(BM_HighWindow)->Arg(1 << 16)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

}  // namespace
