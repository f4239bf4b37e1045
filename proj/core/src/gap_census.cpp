#include "polignac/gap_census.hpp"

#include <numeric>

#include "polignac/errors.hpp"

namespace polignac {

std::uint64_t GapCensus::total_gaps() const {
    std::uint64_t n = 0;
    for (const auto& [gap, count] : counts) n += count;
    return n;
}

void GapSummary::bump(std::uint64_t gap, std::uint64_t by) {
    if (gap >= counts_.size()) counts_.resize(gap + 1, 0);
    counts_[gap] += by;
}

void GapSummary::add_prime(std::uint64_t p) {
    if (prime_count_ == 0) {
        first_ = p;
    } else {
        bump(p - last_, 1);
    }
    last_ = p;
    ++prime_count_;
}

void GapSummary::append(const GapSummary& right) {
    if (right.prime_count_ == 0) return;
    if (prime_count_ == 0) {
        *this = right;
        return;
    }
    bump(right.first_ - last_, 1);
    if (right.counts_.size() > counts_.size()) counts_.resize(right.counts_.size(), 0);
    for (std::size_t g = 0; g < right.counts_.size(); ++g) counts_[g] += right.counts_[g];
    last_ = right.last_;
    prime_count_ += right.prime_count_;
}

GapCensus gap_census(std::uint64_t x, const SieveOptions& opts) {
    if (x > opts.ceiling) {
        throw CapacityError("census bound " + std::to_string(x) + " exceeds the sieve ceiling " +
                            std::to_string(opts.ceiling));
    }
    if (opts.segment_size < 2) throw PreconditionError("segment_size must be >= 2");

    GapSummary total;
    detail::sieve_ordered(
        0, x + 1, opts,
        [](const SegmentSieve& s) {
            GapSummary part;
            s.for_each_prime([&](std::uint64_t p) { part.add_prime(p); });
            return part;
        },
        [&](GapSummary&& part) { total.append(part); });

    GapCensus census;
    census.x = x;
    census.prime_count = total.prime_count();
    const auto& c = total.counts();
    for (std::size_t g = 0; g < c.size(); ++g) {
        if (c[g] != 0) census.counts.emplace(g, c[g]);
    }
    return census;
}

CandidateSet candidate_set(const GapCensus& census, std::uint64_t threshold, GapOne gap_one) {
    if (threshold < 1) throw PreconditionError("candidate threshold T must be >= 1");
    CandidateSet s;
    s.threshold = threshold;
    s.source_x = census.x;
    for (const auto& [gap, count] : census.counts) {
        if (gap == 1 && gap_one == GapOne::Drop) continue;
        if (count >= threshold) s.gaps.push_back(gap);
    }
    return s;
}

Rational density_lower_bound(const Rational& c) {
    if (sgn(c) <= 0) throw PreconditionError("density_lower_bound requires C > 0");
    Rational out = 1 / (2 * c);
    out.canonicalize();
    return out;
}

Rational empirical_density(std::span<const std::uint64_t> positions, std::uint64_t n) {
    if (n == 0) throw PreconditionError("empirical_density requires n >= 1");
    std::uint64_t hits = 0;
    for (auto v : positions) hits += v <= n;
    Rational out(to_big(hits), to_big(n));
    out.canonicalize();
    return out;
}

}  // namespace polignac
