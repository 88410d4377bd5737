#include "mopw/ratcore/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace mopw::ratcore {

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

long BigFloat::exponent() const {
  if (mpfr_zero_p(value_) || !is_finite()) return 0;
  return mpfr_get_exp(value_);
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return buf.data();
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_exp(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_log(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat gamma(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_gamma(r.value_, a.value_, MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_mul_2si(r.value_, a.value_, e, MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_hypot(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_pow(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigFloat den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

}  // namespace mopw::ratcore
