#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "mopw/ratcore/rational.hpp"

namespace mopw::ratcore {

/// Owning MPFR value with an explicit precision. Binary operations round to
/// the larger operand precision; there is no process-wide default.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(double value, mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with value = m 2^e, 0.5 <= |m| < 1; 0 for zero.
  long exponent() const;
  std::string to_string(int digits = 20) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat gamma(const BigFloat& a);
  friend BigFloat ldexp(const BigFloat& a, long e);
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
  /// a^b for a > 0.
  friend BigFloat pow(const BigFloat& a, const BigFloat& b);
  static BigFloat pi(mpfr_prec_t bits);

 private:
  mpfr_t value_;
};

/// Complex pair of BigFloats; only the arithmetic the root solvers need.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigFloat modulus() const { return hypot(re, im); }
};

}  // namespace mopw::ratcore
