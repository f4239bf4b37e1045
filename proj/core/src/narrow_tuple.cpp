#include "polignac/admissibility.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "polignac/errors.hpp"
#include "polignac/sieve.hpp"

namespace polignac {

namespace {

// First k primes strictly greater than k.
std::vector<std::uint64_t> primes_above(std::uint64_t k) {
    std::uint64_t hi = std::max<std::uint64_t>(64, 4 * k);
    SieveOptions opts;
    opts.ceiling = kMaxSieveCeiling;
    while (true) {
        auto ps = primes_between(k + 1, hi, opts);
        if (ps.size() >= k) {
            ps.resize(k);
            return ps;
        }
        hi *= 2;
    }
}

// Narrowest run of k consecutive survivors; returns (offset, diameter).
std::pair<std::size_t, std::uint64_t> tightest_window(const std::vector<std::uint64_t>& s,
                                                      std::size_t k) {
    std::size_t best = 0;
    std::uint64_t best_d = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i + k <= s.size(); ++i) {
        auto d = s[i + k - 1] - s[i];
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return {best, best_d};
}

Tuple shifted(const std::vector<std::uint64_t>& values, std::size_t from, std::size_t k) {
    std::vector<std::uint64_t> out(values.begin() + static_cast<std::ptrdiff_t>(from),
                                   values.begin() + static_cast<std::ptrdiff_t>(from + k));
    const auto base = out.front();
    for (auto& v : out) v -= base;
    return Tuple::from_u64(out);
}

}  // namespace

std::vector<std::uint64_t> greedy_admissible_sieve(std::uint64_t width) {
    std::vector<std::uint64_t> survivors(width + 1);
    for (std::uint64_t i = 0; i <= width; ++i) survivors[i] = i;

    const auto primes = small_primes_up_to(static_cast<std::uint32_t>(
        std::min<std::uint64_t>(width + 1, std::numeric_limits<std::uint32_t>::max())));
    std::vector<std::uint64_t> hits;
    for (std::uint32_t p : primes) {
        if (p > survivors.size()) break;
        hits.assign(p, 0);
        for (auto s : survivors) ++hits[s % p];
        const auto fewest = static_cast<std::uint64_t>(
            std::min_element(hits.begin(), hits.end()) - hits.begin());
        if (hits[fewest] == 0) continue;
        std::erase_if(survivors, [&](std::uint64_t s) { return s % p == fewest; });
    }
    return survivors;
}

NarrowTupleResult narrow_tuple(std::uint64_t k, std::uint64_t max_diameter) {
    if (k < 1) throw PreconditionError("narrow_tuple requires k >= 1");
    NarrowTupleResult result;
    if (k - 1 > max_diameter) {
        result.strategy = "none";
        return result;
    }
    if (k == 1) {
        result.tuple = Tuple::from_u64({0});
        result.best_diameter = 0;
        result.strategy = "trivial";
        return result;
    }

    const auto baseline = primes_above(k);
    Tuple best = shifted(baseline, 0, k);
    std::uint64_t best_d = baseline.back() - baseline.front();
    result.strategy = "consecutive-primes";

    // Widths are tried in increasing order; the first that leaves k survivors
    // wins, since any later success would be at least as wide.
    for (std::uint64_t width = k - 1; width < best_d && width <= max_diameter; ++width) {
        auto survivors = greedy_admissible_sieve(width);
        if (survivors.size() < k) continue;
        auto [from, d] = tightest_window(survivors, k);
        if (d < best_d) {
            best = shifted(survivors, from, k);
            best_d = d;
            result.strategy = "greedy-sieve";
        }
        break;
    }

    if (!admissible(is_admissible(best))) {
        throw std::logic_error("narrow_tuple produced an inadmissible tuple");
    }
    result.best_diameter = best_d;
    if (best_d <= max_diameter) result.tuple = std::move(best);
    return result;
}

}  // namespace polignac
