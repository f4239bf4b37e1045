#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polignac/bigint.hpp"
#include "polignac/sieve.hpp"

namespace polignac {

// Consecutive-prime gaps for all primes <= x.
struct GapCensus {
    std::uint64_t x = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // gap -> occurrences, no zeros
    std::uint64_t prime_count = 0;

    std::uint64_t total_gaps() const;

    friend bool operator==(const GapCensus&, const GapCensus&) = default;
};

// Gap statistics of a contiguous run of primes. append() is associative, so
// per-segment summaries can be built in parallel and folded in range order.
class GapSummary {
public:
    void add_prime(std::uint64_t p);
    void append(const GapSummary& right);

    std::uint64_t prime_count() const { return prime_count_; }
    std::uint64_t first() const { return first_; }
    std::uint64_t last() const { return last_; }
    // Index = gap value.
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    friend bool operator==(const GapSummary&, const GapSummary&) = default;

private:
    void bump(std::uint64_t gap, std::uint64_t by);

    std::uint64_t prime_count_ = 0;
    std::uint64_t first_ = 0;
    std::uint64_t last_ = 0;
    std::vector<std::uint64_t> counts_;
};

// Throws CapacityError if x > opts.ceiling.
GapCensus gap_census(std::uint64_t x, const SieveOptions& opts = {});

enum class GapOne { Keep, Drop };

struct CandidateSet {
    std::uint64_t threshold = 1;
    std::vector<std::uint64_t> gaps;  // ascending
    std::uint64_t source_x = 0;

    friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

// Gaps occurring at least `threshold` times. threshold >= 1.
CandidateSet candidate_set(const GapCensus& census, std::uint64_t threshold,
                           GapOne gap_one = GapOne::Keep);

struct CoverReport {
    std::uint64_t c_emp = 0;
    std::uint64_t m_max = 0;
    // Start of a candidate-free interval of width c_emp - 1; absent when
    // c_emp == 0. Ties resolve to the largest start.
    std::optional<std::uint64_t> worst_m;

    friend bool operator==(const CoverReport&, const CoverReport&) = default;
};

// Smallest C such that every [m, m + C] inside [0, m_max] holds a candidate.
// nullopt when no candidate lies in [0, m_max]. `positions` must be ascending.
std::optional<CoverReport> interval_cover_constant(std::span<const std::uint64_t> positions,
                                                   std::uint64_t m_max);

inline std::optional<CoverReport> interval_cover_constant(const CandidateSet& s,
                                                          std::uint64_t m_max) {
    return interval_cover_constant(std::span<const std::uint64_t>(s.gaps), m_max);
}

// Rescan check of a report against the positions it was computed from.
bool verify_cover(const CoverReport& report, std::span<const std::uint64_t> positions);

// Exactly 1 / (2C). Throws PreconditionError for C <= 0.
Rational density_lower_bound(const Rational& c);

// |S ∩ [0, n]| / n. Throws PreconditionError for n == 0.
Rational empirical_density(std::span<const std::uint64_t> positions, std::uint64_t n);

}  // namespace polignac
