#include "polignac/admissibility.hpp"

#include <algorithm>

#include "polignac/errors.hpp"
#include "polignac/primorial.hpp"
#include "polignac/sieve.hpp"

namespace polignac {

Tuple::Tuple(std::vector<BigInt> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw PreconditionError("tuple must contain at least one element");
    if (sgn(elements_.front()) < 0) throw PreconditionError("tuple elements must be nonnegative");
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i] <= elements_[i - 1]) {
            throw PreconditionError("tuple elements must be strictly ascending");
        }
    }
}

Tuple Tuple::from_u64(const std::vector<std::uint64_t>& elements) {
    std::vector<BigInt> big;
    big.reserve(elements.size());
    for (auto e : elements) big.push_back(to_big(e));
    return Tuple(std::move(big));
}

Tuple Tuple::normalized() const {
    std::vector<BigInt> shifted;
    shifted.reserve(elements_.size());
    for (const auto& e : elements_) shifted.push_back(e - elements_.front());
    return Tuple(std::move(shifted));
}

Tuple parse_tuple(std::string_view text) {
    std::vector<BigInt> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        out.push_back(parse_nonnegative_big(text.substr(pos, comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Tuple(std::move(out));
}

std::string format_tuple(const Tuple& t) {
    std::string s;
    for (const auto& e : t.elements()) {
        if (!s.empty()) s += ',';
        s += to_decimal(e);
    }
    return s;
}

AdmissibilityResult is_admissible(const Tuple& h) {
    const auto k = h.size();
    AdmissibilityCertificate cert;
    if (k < 2) return cert;

    std::vector<std::uint64_t> residues(k);
    std::vector<std::int64_t> owner;
    for (std::uint32_t p : small_primes_up_to(static_cast<std::uint32_t>(k))) {
        owner.assign(p, -1);
        for (std::size_t i = 0; i < k; ++i) {
            auto r = mod_small(h.elements()[i], p);
            if (owner[r] < 0) owner[r] = static_cast<std::int64_t>(i);
        }
        auto missed = std::find(owner.begin(), owner.end(), -1);
        if (missed == owner.end()) {
            AdmissibilityViolation v{p, {}};
            v.evidence.reserve(p);
            for (auto idx : owner) v.evidence.push_back(h.elements()[static_cast<std::size_t>(idx)]);
            return v;
        }
        cert.entries.push_back({p, static_cast<std::uint64_t>(missed - owner.begin())});
    }
    return cert;
}

bool verify_certificate(const Tuple& h, const AdmissibilityCertificate& cert) {
    const auto primes = small_primes_up_to(static_cast<std::uint32_t>(h.size()));
    if (cert.entries.size() != primes.size()) return false;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& e = cert.entries[i];
        if (e.p != primes[i] || e.residue >= e.p) return false;
        for (const auto& x : h.elements()) {
            if (mod_small(x, e.p) == e.residue) return false;
        }
    }
    return true;
}

bool verify_violation(const Tuple& h, const AdmissibilityViolation& v) {
    if (v.p < 2 || v.evidence.size() != v.p) return false;
    for (std::uint64_t r = 0; r < v.p; ++r) {
        const auto& e = v.evidence[r];
        if (mod_small(e, v.p) != r) return false;
        if (!std::binary_search(h.elements().begin(), h.elements().end(), e)) return false;
    }
    return true;
}

Tuple lemma1_tuple(std::uint64_t k, const BigInt& n) {
    if (k < 1) throw PreconditionError("lemma1_tuple requires k >= 1");
    if (n < 1) throw PreconditionError("lemma1_tuple requires N >= 1");
    const BigInt step = primorial(k) * n;
    std::vector<BigInt> out;
    out.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) out.push_back(step * to_big(i));
    return Tuple(std::move(out));
}

std::vector<BigInt> lemma1_polignac_window(std::uint64_t k, const BigInt& n) {
    if (k < 2) throw PreconditionError("lemma1_polignac_window requires k >= 2");
    if (n < 1) throw PreconditionError("lemma1_polignac_window requires N >= 1");
    const BigInt step = primorial(k) * n;
    std::vector<BigInt> out;
    out.reserve(k - 1);
    for (std::uint64_t i = 1; i < k; ++i) out.push_back(step * to_big(i));
    return out;
}

}  // namespace polignac
