#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mopw::ratcore {

/// Arbitrary-precision rational. GMP keeps every arithmetic result in lowest
/// terms with a positive denominator; values built from raw numerator and
/// denominator must go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p", "-p", "p/q" (q != 0) with optional surrounding blanks.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

int sign(const Rational& value);

Rational factorial(unsigned n);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
Rational rising_factorial(const Rational& a, unsigned k);

/// Generalized binomial coefficient top (top-1) ... (top-k+1) / k!.
Rational binomial(const Rational& top, unsigned k);

/// Integer power; 0^0 == 1. Negative exponents require a nonzero base.
Rational power(const Rational& base, int exponent);

}  // namespace mopw::ratcore
