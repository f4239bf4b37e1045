#include "polignac/sieve.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "polignac/bigint.hpp"
#include "polignac/errors.hpp"

namespace polignac {

std::uint64_t sieve_ceiling_from_env() {
    const char* raw = std::getenv("POLIGNAC_SIEVE_CEILING");
    if (raw == nullptr || *raw == '\0') return kDefaultSieveCeiling;
    std::uint64_t v = 0;
    try {
        v = parse_u64(raw);
    } catch (const std::exception&) {
        throw PreconditionError(std::string("POLIGNAC_SIEVE_CEILING is not a decimal integer: ") + raw);
    }
    if (v < 2 || v > kMaxSieveCeiling) {
        throw PreconditionError("POLIGNAC_SIEVE_CEILING must lie in [2, " +
                                std::to_string(kMaxSieveCeiling) + "]");
    }
    return v;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

std::vector<std::uint32_t> small_primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<std::uint8_t> composite(std::size_t{limit} + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

void SegmentSieve::sieve(std::uint64_t lo, std::uint64_t hi,
                         std::span<const std::uint32_t> base_primes) {
    lo_ = lo;
    hi_ = hi;
    first_odd_ = std::max<std::uint64_t>(3, lo | 1);
    if (first_odd_ >= hi) {
        odd_.clear();
        return;
    }
    const std::uint64_t n_odd = (hi - first_odd_ + 1) / 2;
    odd_.assign(n_odd, 1);

    for (std::uint32_t p32 : base_primes) {
        const std::uint64_t p = p32;
        if (p == 2) continue;
        if (p * p >= hi) break;
        std::uint64_t start = p * p;
        if (start < first_odd_) {
            start = (first_odd_ + p - 1) / p * p;
            if ((start & 1) == 0) start += p;
        }
        for (std::uint64_t m = (start - first_odd_) / 2; m < n_odd; m += p) odd_[m] = 0;
    }
}

std::size_t SegmentSieve::count() const {
    std::size_t n = (lo_ <= 2 && 2 < hi_) ? 1 : 0;
    for (auto b : odd_) n += b;
    return n;
}

namespace detail {

void check_range(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts) {
    if (lo > hi) throw PreconditionError("sieve range requires lo <= hi");
    if (opts.segment_size < 2) throw PreconditionError("segment_size must be >= 2");
    if (opts.ceiling > kMaxSieveCeiling) {
        throw PreconditionError("sieve ceiling exceeds " + std::to_string(kMaxSieveCeiling));
    }
    if (hi > opts.ceiling) {
        throw CapacityError("range end " + std::to_string(hi) + " exceeds the sieve ceiling " +
                            std::to_string(opts.ceiling));
    }
}

}  // namespace detail

void for_each_prime_segment(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts,
                            const std::function<void(PrimeSegment&&)>& sink) {
    detail::check_range(lo, hi, opts);
    detail::sieve_ordered(
        lo, hi, opts,
        [](const SegmentSieve& s) {
            PrimeSegment seg{s.lo(), s.hi(), {}};
            seg.primes.reserve(s.count());
            s.for_each_prime([&](std::uint64_t p) { seg.primes.push_back(p); });
            return seg;
        },
        [&](PrimeSegment&& seg) { sink(std::move(seg)); });
}

std::vector<PrimeSegment> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                          const SieveOptions& opts) {
    std::vector<PrimeSegment> out;
    for_each_prime_segment(lo, hi, opts, [&](PrimeSegment&& s) { out.push_back(std::move(s)); });
    return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          const SieveOptions& opts) {
    std::vector<std::uint64_t> out;
    for_each_prime_segment(lo, hi, opts, [&](PrimeSegment&& s) {
        out.insert(out.end(), s.primes.begin(), s.primes.end());
    });
    return out;
}

std::uint64_t count_primes(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts) {
    detail::check_range(lo, hi, opts);
    std::uint64_t total = 0;
    detail::sieve_ordered(
        lo, hi, opts, [](const SegmentSieve& s) { return s.count(); },
        [&](std::size_t n) { total += n; });
    return total;
}

}  // namespace polignac
