#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace polignac {

inline constexpr std::uint64_t kDefaultSieveCeiling = 10'000'000'000ULL;
inline constexpr std::uint64_t kMaxSieveCeiling = 1'000'000'000'000'000ULL;
inline constexpr std::uint64_t kDefaultSegmentSize = 1ULL << 18;

// Sieve ceiling from POLIGNAC_SIEVE_CEILING, or the default when unset.
// Throws PreconditionError on a malformed or out-of-range value.
std::uint64_t sieve_ceiling_from_env();

struct SieveOptions {
    std::uint64_t segment_size = kDefaultSegmentSize;
    unsigned workers = 1;
    std::uint64_t ceiling = kDefaultSieveCeiling;
};

// Primes in [lo, hi), ascending.
struct PrimeSegment {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> primes;

    friend bool operator==(const PrimeSegment&, const PrimeSegment&) = default;
};

std::uint64_t isqrt(std::uint64_t n);

// Plain sieve of Eratosthenes for the sieving primes; limit is inclusive.
std::vector<std::uint32_t> small_primes_up_to(std::uint32_t limit);

// Odd-only sieve of one window [lo, hi). Reusable across windows.
class SegmentSieve {
public:
    // base_primes must contain every prime <= isqrt(hi - 1).
    void sieve(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base_primes);

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    template <class F>
    void for_each_prime(F&& f) const {
        if (lo_ <= 2 && 2 < hi_) f(std::uint64_t{2});
        for (std::size_t i = 0; i < odd_.size(); ++i) {
            if (odd_[i]) f(first_odd_ + 2 * i);
        }
    }

    std::size_t count() const;

private:
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
    std::uint64_t first_odd_ = 1;
    std::vector<std::uint8_t> odd_;
};

namespace detail {

void check_range(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts);

// Splits [lo, hi) into segment_size windows, runs `map` on each window on a
// worker, and hands results to `consume` strictly in range order on the
// calling thread. No ceiling check here.
template <class Map, class Consume>
void sieve_ordered(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts, Map&& map,
                   Consume&& consume) {
    if (lo >= hi) return;
    const std::uint64_t seg = opts.segment_size;
    const std::uint64_t n_segments = (hi - lo - 1) / seg + 1;
    const auto base = small_primes_up_to(static_cast<std::uint32_t>(isqrt(hi - 1)));
    const auto window = [&](std::uint64_t idx) {
        const std::uint64_t a = lo + idx * seg;
        const std::uint64_t b = (hi - a > seg) ? a + seg : hi;
        return std::pair{a, b};
    };

    using Result = std::invoke_result_t<Map&, const SegmentSieve&>;
    const unsigned workers = opts.workers == 0 ? 1 : opts.workers;

    if (workers == 1) {
        SegmentSieve s;
        for (std::uint64_t idx = 0; idx < n_segments; ++idx) {
            auto [a, b] = window(idx);
            s.sieve(a, b, base);
            consume(map(s));
        }
        return;
    }

    const std::uint64_t batch = std::uint64_t{workers} * 4;
    std::vector<std::optional<Result>> slots;
    for (std::uint64_t first = 0; first < n_segments; first += batch) {
        const std::uint64_t count = std::min(batch, n_segments - first);
        slots.assign(count, std::nullopt);
        std::atomic<std::uint64_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            const unsigned spawn = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
            pool.reserve(spawn);
            for (unsigned w = 0; w < spawn; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        SegmentSieve s;
                        for (std::uint64_t i = next++; i < count; i = next++) {
                            auto [a, b] = window(first + i);
                            s.sieve(a, b, base);
                            slots[i].emplace(map(s));
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        for (auto& r : slots) consume(std::move(*r));
    }
}

}  // namespace detail

// Streams the primes of [lo, hi) as consecutive PrimeSegments, in range order.
// Throws PreconditionError (lo > hi, segment_size < 2) or CapacityError
// (hi > ceiling).
void for_each_prime_segment(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts,
                            const std::function<void(PrimeSegment&&)>& sink);

std::vector<PrimeSegment> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                          const SieveOptions& opts = {});

// Flattened convenience over primes_in_range.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          const SieveOptions& opts = {});

std::uint64_t count_primes(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts = {});

}  // namespace polignac
