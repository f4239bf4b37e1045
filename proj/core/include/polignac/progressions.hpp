#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "polignac/bigint.hpp"

namespace polignac {

// Block j (1-based) is (i * k^(j-1) * q * d) for i = 1..k-1, i.e. the Lemma-1
// window for N = k^(j-1) * q. Block 1 is (qd, 2qd, ..., (k-1)qd).
struct BlockSequence {
    BigInt q;
    std::uint64_t k = 0;
    BigInt d;
    std::vector<std::vector<BigInt>> blocks;
};

// Requires q >= 1, k >= 2, block_count >= 1.
BlockSequence ap_blocks(const BigInt& q, std::uint64_t k, std::uint64_t block_count);

// N_i = (a/q)(i*d - 1), so that a + N_i*q = a*i*d lies on a, a+q, a+2q, ...
struct DirichletSpec {
    BigInt a;
    BigInt q;
    std::uint64_t k = 0;
    BigInt d;
    std::vector<BigInt> n_values;  // i = 1..count
    std::vector<BigInt> terms;     // a + N_i * q
};

// Requires a >= 1, q >= 1, q | a, k >= 1, count >= 1. The identity is checked
// for every i before returning. The a = 0 progression is ap_blocks' job.
DirichletSpec dirichlet_subsequence(const BigInt& a, const BigInt& q, std::uint64_t k,
                                    std::uint64_t count);

bool verify_dirichlet(const DirichletSpec& spec);

struct APRun {
    std::int64_t start = 0;
    std::int64_t step = 1;
    std::uint64_t length = 1;

    friend bool operator==(const APRun&, const APRun&) = default;
};

inline constexpr std::size_t kMaxApInput = 100'000;

// Longest AP inside an ascending duplicate-free set; ties go to the smallest
// start, then the smallest step. Singletons give step 1, length 1.
APRun longest_ap_in_set(std::span<const std::int64_t> s);

bool ap_within(const APRun& run, std::span<const std::int64_t> s);

// One decimal integer per line, ascending, LF-terminated.
std::vector<std::int64_t> parse_integer_set(std::string_view text);

}  // namespace polignac
