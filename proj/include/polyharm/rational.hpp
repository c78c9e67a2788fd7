#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polyharm {

using Int = mpz_class;
using Rational = mpq_class;

// Canonicalized rational from integer parts; rejects a zero denominator.
Rational make_rational(Int numerator, Int denominator);

// Parses "p" or "p/q" with optional sign.
Rational rational_from_string(const std::string& text);

// Canonical text form, "p" or "p/q".
std::string to_string(const Rational& value);

Int int_pow(Int base, unsigned exponent);
Int binomial_int(unsigned long n, unsigned long k);

// Binomial coefficient as int64; 0 when k < 0, n < 0 or k > n.
std::int64_t binomial(int n, int k);

}  // namespace polyharm
