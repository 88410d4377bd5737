#include "mopw/ratcore/rational.hpp"

#include <cctype>

#include "mopw/error.hpp"

namespace mopw::ratcore {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s, true)) {
      throw ValidationError("not a rational literal: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(s));
  }
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw ValidationError("not a rational literal: '" + std::string(text) + "'");
  }
  return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

int sign(const Rational& value) { return sgn(value); }

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational rising_factorial(const Rational& a, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= a + i;
  return out;
}

Rational binomial(const Rational& top, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= top - i;
    out /= i + 1;
  }
  return out;
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw ValidationError("zero raised to a negative power");
    return 1 / power(base, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace mopw::ratcore
