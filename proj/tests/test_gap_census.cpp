#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polignac/errors.hpp"
#include "polignac/gap_census.hpp"

using namespace polignac;

namespace {

SieveOptions opts(std::uint64_t seg, unsigned workers) {
    SieveOptions o;
    o.segment_size = seg;
    o.workers = workers;
    return o;
}

GapSummary summarize(const std::vector<std::uint64_t>& primes) {
    GapSummary s;
    for (auto p : primes) s.add_prime(p);
    return s;
}

}  // namespace

TEST(GapCensus, UpToTwo) {
    const auto c = gap_census(2);
    EXPECT_TRUE(c.counts.empty());
    EXPECT_EQ(c.prime_count, 1u);
}

TEST(GapCensus, UpToZeroAndOne) {
    EXPECT_EQ(gap_census(0).prime_count, 0u);
    EXPECT_EQ(gap_census(1).prime_count, 0u);
    EXPECT_TRUE(gap_census(1).counts.empty());
}

TEST(GapCensus, UpToThirty) {
    const auto c = gap_census(30);
    EXPECT_EQ(c.prime_count, 10u);
    EXPECT_EQ(c.counts, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 4}, {4, 3}, {6, 1}}));
}

TEST(GapCensus, InclusiveBound) {
    // 29 is prime: the census bound is inclusive.
    EXPECT_EQ(gap_census(29), (GapCensus{29, {{1, 1}, {2, 4}, {4, 3}, {6, 1}}, 10}));
    EXPECT_EQ(gap_census(28).prime_count, 9u);
}

TEST(GapCensus, TwinCountBelowMillion) {
    // 8169 twin pairs below 10^6, frozen from an unsegmented numpy sieve.
    const auto c = gap_census(1'000'000, opts(1 << 16, 2));
    EXPECT_EQ(c.counts.at(2), 8169u);
    EXPECT_EQ(oracle::gap_counts(oracle::simple_sieve(1'000'001)), c.counts);
    EXPECT_EQ(c.prime_count, 78498u);
}

TEST(GapCensus, ConservationParityAndNoZeros) {
    for (std::uint64_t x : {3u, 4u, 5u, 100u, 1000u, 7919u, 65536u, 250'000u}) {
        const auto c = gap_census(x, opts(4096, 3));
        EXPECT_EQ(c.total_gaps(), c.prime_count == 0 ? 0 : c.prime_count - 1) << x;
        for (const auto& [g, n] : c.counts) {
            EXPECT_TRUE(g == 1 || g % 2 == 0) << g;
            EXPECT_GT(n, 0u);
        }
    }
}

TEST(GapCensus, DeterministicAcrossSegmentationAndWorkers) {
    const auto ref = gap_census(2'000'000, opts(kDefaultSegmentSize, 1));
    for (unsigned w : {1u, 2u, 8u}) {
        for (std::uint64_t seg : {2'000ULL, 77'777ULL, 1ULL << 20}) {
            ASSERT_EQ(gap_census(2'000'000, opts(seg, w)), ref) << w << "/" << seg;
        }
    }
}

TEST(GapCensus, Monotone) {
    const auto small = gap_census(50'000);
    const auto big = gap_census(200'000);
    for (const auto& [g, n] : small.counts) {
        ASSERT_TRUE(big.counts.contains(g));
        EXPECT_LE(n, big.counts.at(g));
    }
}

TEST(GapCensus, CapacityError) {
    SieveOptions o;
    o.ceiling = 1000;
    EXPECT_THROW(gap_census(1001, o), CapacityError);
    EXPECT_NO_THROW(gap_census(1000, o));
}

TEST(GapSummary, AppendIsAssociative) {
    const auto primes = oracle::simple_sieve(5000);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> cut(0, primes.size());
        std::size_t a = cut(rng), b = cut(rng);
        if (a > b) std::swap(a, b);
        const std::vector<std::uint64_t> x(primes.begin(), primes.begin() + a);
        const std::vector<std::uint64_t> y(primes.begin() + a, primes.begin() + b);
        const std::vector<std::uint64_t> z(primes.begin() + b, primes.end());

        GapSummary left = summarize(x);
        GapSummary xy = summarize(x);
        xy.append(summarize(y));
        left = xy;
        left.append(summarize(z));

        GapSummary yz = summarize(y);
        yz.append(summarize(z));
        GapSummary right = summarize(x);
        right.append(yz);

        ASSERT_EQ(left.prime_count(), right.prime_count());
        ASSERT_EQ(left.first(), right.first());
        ASSERT_EQ(left.last(), right.last());
        // trailing zero buckets may differ in length
        auto trim = [](std::vector<std::uint64_t> v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
            return v;
        };
        ASSERT_EQ(trim(left.counts()), trim(right.counts()));
        ASSERT_EQ(trim(left.counts()), trim(summarize(primes).counts()));
    }
}

TEST(CandidateSet, FromThirty) {
    const auto c = gap_census(30);
    EXPECT_EQ(candidate_set(c, 1).gaps, (std::vector<std::uint64_t>{1, 2, 4, 6}));
    EXPECT_EQ(candidate_set(c, 3).gaps, (std::vector<std::uint64_t>{2, 4}));
    EXPECT_EQ(candidate_set(c, 1, GapOne::Drop).gaps, (std::vector<std::uint64_t>{2, 4, 6}));
    EXPECT_EQ(candidate_set(c, 3).source_x, 30u);
    EXPECT_TRUE(candidate_set(gap_census(2), 1).gaps.empty());
    EXPECT_THROW(candidate_set(c, 0), PreconditionError);
}

TEST(CandidateSet, NestedInThreshold) {
    const auto c = gap_census(300'000);
    for (std::uint64_t t1 = 1; t1 < 2000; t1 = t1 * 3 + 1) {
        const auto s1 = candidate_set(c, t1);
        const auto s2 = candidate_set(c, t1 * 2);
        ASSERT_TRUE(std::includes(s1.gaps.begin(), s1.gaps.end(), s2.gaps.begin(), s2.gaps.end()));
        for (auto g : s1.gaps) ASSERT_GE(c.counts.at(g), t1);
    }
}
