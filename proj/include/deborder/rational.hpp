#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace deborder {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Accepts "p/q" or "p" with optional leading '-'; the result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, q > 0, always with the denominator.
std::string to_string(const Rational& q);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);
/// (d)_j = d (d-1) ... (d-j+1)
Integer falling_factorial(unsigned d, unsigned j);
Rational power(const Rational& base, unsigned exponent);

}  // namespace deborder
