#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace helly {

// Exact arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Reduced "p/q" rendering; integers render without a denominator ("3", "-1").
std::string to_string(const Rational& q);

// Accepts "p/q", "p" and optional leading sign. Throws helly::Error on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Denominator of the reduced fraction, as an exact integer.
mpz_class denominator(const Rational& q);

Rational abs(const Rational& q);

}  // namespace helly
