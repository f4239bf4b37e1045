#include "polignac/progressions.hpp"

#include <stdexcept>

#include "polignac/admissibility.hpp"
#include "polignac/errors.hpp"
#include "polignac/primorial.hpp"

namespace polignac {

BlockSequence ap_blocks(const BigInt& q, std::uint64_t k, std::uint64_t block_count) {
    if (q < 1) throw PreconditionError("ap_blocks requires q >= 1");
    if (k < 2) throw PreconditionError("ap_blocks requires k >= 2");
    if (block_count < 1) throw PreconditionError("ap_blocks requires block_count >= 1");

    BlockSequence seq{q, k, primorial(k), {}};
    seq.blocks.reserve(block_count);
    BigInt scale = q;  // k^(j-1) * q
    const BigInt big_k = to_big(k);
    for (std::uint64_t j = 0; j < block_count; ++j) {
        std::vector<BigInt> block;
        block.reserve(k - 1);
        const BigInt step = scale * seq.d;
        for (std::uint64_t i = 1; i < k; ++i) block.push_back(step * to_big(i));
        seq.blocks.push_back(std::move(block));
        scale *= big_k;
    }
    return seq;
}

DirichletSpec dirichlet_subsequence(const BigInt& a, const BigInt& q, std::uint64_t k,
                                    std::uint64_t count) {
    if (q < 1) throw PreconditionError("dirichlet_subsequence requires q >= 1");
    if (a == 0) {
        throw PreconditionError("dirichlet_subsequence: a = 0 is the progression q, 2q, ...; use ap_blocks");
    }
    if (a < 1) throw PreconditionError("dirichlet_subsequence requires a >= 1");
    if (k < 1) throw PreconditionError("dirichlet_subsequence requires k >= 1");
    if (count < 1) throw PreconditionError("dirichlet_subsequence requires count >= 1");
    if (!mpz_divisible_p(a.get_mpz_t(), q.get_mpz_t())) {
        throw PreconditionError("dirichlet_subsequence requires q | a (q = " + to_decimal(q) +
                                ", a = " + to_decimal(a) + ")");
    }

    DirichletSpec spec{a, q, k, primorial(k), {}, {}};
    const BigInt ratio = a / q;
    spec.n_values.reserve(count);
    spec.terms.reserve(count);
    for (std::uint64_t i = 1; i <= count; ++i) {
        BigInt n = ratio * (to_big(i) * spec.d - 1);
        spec.terms.push_back(a + n * q);
        spec.n_values.push_back(std::move(n));
    }
    if (!verify_dirichlet(spec)) {
        throw std::logic_error("dirichlet identity a + N_i q = a i d failed");
    }
    return spec;
}

bool verify_dirichlet(const DirichletSpec& spec) {
    if (spec.n_values.size() != spec.terms.size()) return false;
    for (std::size_t idx = 0; idx < spec.n_values.size(); ++idx) {
        const BigInt i = to_big(idx + 1);
        const auto& n = spec.n_values[idx];
        if (sgn(n) < 0) return false;
        if (spec.a + n * spec.q != spec.a * i * spec.d) return false;
        if (spec.terms[idx] != spec.a * i * spec.d) return false;
    }
    return true;
}

std::vector<std::int64_t> parse_integer_set(std::string_view text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    if (text.back() != '\n') throw FormatError("integer set must be LF-terminated");
    std::size_t pos = 0;
    std::size_t lineno = 0;
    while (pos < text.size()) {
        ++lineno;
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl - pos);
        pos = nl + 1;
        BigInt v;
        try {
            v = parse_big(line);
        } catch (const FormatError& e) {
            throw FormatError("integer set line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!v.fits_slong_p()) {
            throw FormatError("integer set line " + std::to_string(lineno) + ": out of 64-bit range");
        }
        const auto value = static_cast<std::int64_t>(v.get_si());
        if (!out.empty() && value <= out.back()) {
            throw FormatError("integer set line " + std::to_string(lineno) +
                              ": values must be strictly ascending");
        }
        out.push_back(value);
    }
    return out;
}

}  // namespace polignac
