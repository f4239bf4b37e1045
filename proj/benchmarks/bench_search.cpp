#include <random>
#include <set>

#include <benchmark/benchmark.h>

#include "polignac/admissibility.hpp"
#include "polignac/progressions.hpp"

namespace {

void BM_NarrowTuple(benchmark::State& state) {
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(polignac::narrow_tuple(k, 10 * k));
}
BENCHMARK(BM_NarrowTuple)->Arg(20)->Arg(59)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Lemma1Admissibility(benchmark::State& state) {
    const auto t = polignac::lemma1_tuple(static_cast<std::uint64_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(polignac::is_admissible(t));
}
BENCHMARK(BM_Lemma1Admissibility)->Arg(59)->Arg(500);

void BM_LongestAp(benchmark::State& state) {
    std::mt19937_64 rng(5);
    std::set<std::int64_t> u;
    while (u.size() < static_cast<std::size_t>(state.range(0))) u.insert(static_cast<std::int64_t>(rng() % 100'000));
    const std::vector<std::int64_t> s(u.begin(), u.end());
    for (auto _ : state) benchmark::DoNotOptimize(polignac::longest_ap_in_set(s));
}
BENCHMARK(BM_LongestAp)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
