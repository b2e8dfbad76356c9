#pragma once

#include <gmpxx.h>

#include <string>

namespace aklab {

// All measure arithmetic is exact. Rational is a thin alias over GMP's
// canonicalized rational type; helpers below keep parsing and printing in
// one place so every tool agrees on formats.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "a/b" or a bare integer. Rejects decimal points, exponents and
// empty input. Throws std::invalid_argument on malformed input and
// std::domain_error on zero denominators.
Rational parse_rational(const std::string& text);

// Canonical "num/den" form, denominator always present ("3/1", "-2/5").
std::string to_string(const Rational& value);

// Round-trip style decimal with 17 significant digits, e.g.
// "2.9629629629629630e-01". Zero prints as "0".
std::string to_decimal(const Rational& value);

// value^exp with negative exponents allowed; 0^negative throws
// std::domain_error.
Rational pow_rational(const Rational& value, long exp);

// C(n, k) as an exact integer; 0 when k < 0 or k > n. n must be >= 0.
BigInt binomial(long n, long k);

}
