#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qacert {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" (no decimals). Throws InputError.
Rational parse_rational(std::string_view text);

/// Remainder in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// Throws DomainError if `z` does not fit.
std::int64_t to_int64(const Integer& z);

bool is_integral(const Rational& q);

/// Inverse of `a` modulo `m` (gcd must be 1), in [0, m).
Integer inverse_mod(const Integer& a, const Integer& m);

}  // namespace qacert
