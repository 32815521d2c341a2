#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cochain {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every constructor path calls canonicalize().
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "-p", "p/q" and finite decimals such as "0.25" or "-1.5".
Rational parse_rational(std::string_view text);

// "3", "-3/4".
std::string to_string(const Rational& value);

// Exact square root when numerator and denominator are both perfect squares.
bool exact_sqrt(const Rational& value, Rational& root);

}  // namespace cochain
