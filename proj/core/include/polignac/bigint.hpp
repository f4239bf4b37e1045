#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polignac {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt to_big(std::uint64_t v);

// Full decimal rendering, never scientific notation.
std::string to_decimal(const BigInt& v);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_decimal(const Rational& v);

// Fixed-point decimal approximation for human-facing output only.
std::string to_fixed(const Rational& v, int digits);

// Strict parsers: optional leading '-' (signed variants only), then digits.
BigInt parse_big(std::string_view text);
BigInt parse_nonnegative_big(std::string_view text);
std::uint64_t parse_u64(std::string_view text);

// Accepts "n", "n/d" or a plain decimal "i.f"; result is canonicalized.
Rational parse_rational(std::string_view text);

// Residue of a nonnegative value modulo a small modulus.
std::uint64_t mod_small(const BigInt& v, std::uint64_t modulus);

}  // namespace polignac
