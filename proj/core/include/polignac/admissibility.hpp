#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polignac/bigint.hpp"

namespace polignac {

// Number of primes each admissible translate is assumed to contain. Every
// construction here is stated for pairs of primes; it is not a parameter.
inline constexpr unsigned kPrimesPerTranslate = 2;

// Strictly ascending, nonnegative, non-empty set of integers.
class Tuple {
public:
    // Throws PreconditionError unless the elements are valid.
    explicit Tuple(std::vector<BigInt> elements);

    static Tuple from_u64(const std::vector<std::uint64_t>& elements);

    const std::vector<BigInt>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const BigInt& min() const { return elements_.front(); }
    const BigInt& max() const { return elements_.back(); }
    BigInt diameter() const { return max() - min(); }

    // Translate so that min() == 0.
    Tuple normalized() const;

    friend bool operator==(const Tuple& a, const Tuple& b) { return a.elements_ == b.elements_; }

private:
    std::vector<BigInt> elements_;
};

// "0,2,6" <-> Tuple.
Tuple parse_tuple(std::string_view text);
std::string format_tuple(const Tuple& t);

struct MissedResidue {
    std::uint64_t p = 0;
    std::uint64_t residue = 0;

    friend bool operator==(const MissedResidue&, const MissedResidue&) = default;
};

// One entry per prime p <= k, ascending in p.
struct AdmissibilityCertificate {
    std::vector<MissedResidue> entries;
};

// evidence[r] is a tuple element congruent to r mod p, for every r in [0, p).
struct AdmissibilityViolation {
    std::uint64_t p = 0;
    std::vector<BigInt> evidence;
};

using AdmissibilityResult = std::variant<AdmissibilityCertificate, AdmissibilityViolation>;

// Only primes p <= k need checking: k elements cannot cover p > k classes.
// Returns the certificate, or the violation at the smallest bad prime.
AdmissibilityResult is_admissible(const Tuple& h);

inline bool admissible(const AdmissibilityResult& r) {
    return std::holds_alternative<AdmissibilityCertificate>(r);
}

// Recompute residues and confirm the witnesses against the tuple.
bool verify_certificate(const Tuple& h, const AdmissibilityCertificate& cert);
bool verify_violation(const Tuple& h, const AdmissibilityViolation& v);

// {0, dN, 2dN, ..., (k-1)dN} with d = primorial(k). Requires k >= 1, N >= 1.
Tuple lemma1_tuple(std::uint64_t k, const BigInt& n);

// {dN, 2dN, ..., (k-1)dN}: the differences one of which must recur. k >= 2.
std::vector<BigInt> lemma1_polignac_window(std::uint64_t k, const BigInt& n);

struct NarrowTupleResult {
    // Normalized admissible tuple within the diameter bound, if one was found.
    std::optional<Tuple> tuple;
    // Smallest diameter any strategy reached (meaningful even on failure,
    // absent when k - 1 already exceeds the bound).
    std::optional<std::uint64_t> best_diameter;
    std::string strategy;
};

// Baseline: the k consecutive primes above k. Improvement: greedy residue
// sieving of [0, D] for growing D. Each candidate is re-checked with
// is_admissible. Failure is a reported outcome, not an exception.
NarrowTupleResult narrow_tuple(std::uint64_t k, std::uint64_t max_diameter);

// Greedy sieve of [0, width]: per prime p (while p <= survivors), drop the
// residue class with the fewest survivors, ties to the smallest residue.
// The survivors are admissible.
std::vector<std::uint64_t> greedy_admissible_sieve(std::uint64_t width);

}  // namespace polignac
