#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mopw/ratcore/rational.hpp"

namespace mopw::ratcore {

/// Dense univariate polynomial over the rationals. coeffs()[k] multiplies x^k;
/// the highest stored coefficient is never zero, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  /// The polynomial x.
  static Poly identity();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;
  /// Coefficient of x^k (zero past the degree).
  Rational coeff(std::size_t k) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);
  Poly& operator/=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly derivative(const Poly& p);
/// Antiderivative with zero constant term.
Poly antiderivative(const Poly& p);
/// Exact Horner evaluation.
Rational evaluate(const Poly& p, const Rational& x);
/// p(scale * x + shift), expanded.
Poly compose_linear(const Poly& p, const Rational& scale, const Rational& shift);

/// Euclidean division a = q b + r with deg r < deg b. Throws on b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b when b divides a exactly; throws otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) == 0.
Poly gcd(const Poly& a, const Poly& b);
Poly make_monic(const Poly& p);
/// p / gcd(p, p'), made monic. Every root of the result is simple.
Poly square_free_part(const Poly& p);

/// Human-readable rendering, highest power first ("2*x^5 - 119/6*x^4 + ...").
std::string to_string(const Poly& p);

}  // namespace mopw::ratcore
