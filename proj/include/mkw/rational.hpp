#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mkw {

// Exact coefficients everywhere; gmp keeps them canonical after every operation.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

}  // namespace mkw
