#include "polignac/bigint.hpp"

#include <limits>

#include "polignac/errors.hpp"

namespace polignac {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

BigInt to_big(std::uint64_t v) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

std::string to_decimal(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str(10);
    return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

std::string to_fixed(const Rational& v, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = v.get_num() * scale;
    BigInt q;
    // round half away from zero
    BigInt den = v.get_den();
    BigInt twice = 2 * abs(num) + den;
    q = twice / (2 * den);
    std::string sign = sgn(num) < 0 && q != 0 ? "-" : "";
    std::string digits_str = q.get_str(10);
    if (digits == 0) return sign + digits_str;
    if (static_cast<int>(digits_str.size()) <= digits) {
        digits_str.insert(0, static_cast<std::size_t>(digits + 1) - digits_str.size(), '0');
    }
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
    return sign + digits_str;
}

BigInt parse_big(std::string_view text) {
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    if (!all_digits(body)) throw FormatError("not a decimal integer: '" + std::string(text) + "'");
    BigInt v(std::string(body), 10);
    return neg ? BigInt(-v) : v;
}

BigInt parse_nonnegative_big(std::string_view text) {
    if (!all_digits(text)) {
        throw FormatError("not a nonnegative decimal integer: '" + std::string(text) + "'");
    }
    return BigInt(std::string(text), 10);
}

std::uint64_t parse_u64(std::string_view text) {
    BigInt v = parse_nonnegative_big(text);
    if (v > to_big(std::numeric_limits<std::uint64_t>::max())) {
        throw FormatError("integer out of 64-bit range: '" + std::string(text) + "'");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_big(text.substr(0, slash));
        BigInt den = parse_big(text.substr(slash + 1));
        if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        bool neg = !ip.empty() && ip.front() == '-';
        if (neg) ip.remove_prefix(1);
        if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp) || (ip.empty() && fp.empty())) {
            throw FormatError("not a decimal number: '" + std::string(text) + "'");
        }
        BigInt den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        BigInt num(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        Rational r(neg ? BigInt(-num) : num, den);
        r.canonicalize();
        return r;
    }
    return Rational(parse_big(text));
}

std::uint64_t mod_small(const BigInt& v, std::uint64_t modulus) {
    return mpz_fdiv_ui(v.get_mpz_t(), modulus);
}

}  // namespace polignac
