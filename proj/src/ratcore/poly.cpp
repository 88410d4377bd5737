#include "mopw/ratcore/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mopw/error.hpp"

namespace mopw::ratcore {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::identity() { return monomial(1, 1); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly& Poly::operator/=(const Rational& scalar) {
  if (scalar == 0) throw ValidationError("polynomial divided by zero");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) out[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return Poly(std::move(out));
}

Poly antiderivative(const Poly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(p.coeffs().size() + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k + 1] = p.coeffs()[k] / static_cast<unsigned long>(k + 1);
  return Poly(std::move(out));
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

Poly compose_linear(const Poly& p, const Rational& scale, const Rational& shift) {
  const Poly inner({shift, scale});
  Poly acc;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * inner + Poly::constant(c[k]);
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational f = rem[k + db] * inv_lead;
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= f * bc[i];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

Poly square_free_part(const Poly& p) {
  if (p.degree() < 1) return make_monic(p);
  return make_monic(exact_quotient(p, gcd(p, derivative(p))));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1) && k > 0;
    if (!unit) out << to_string(mag);
    if (k > 0) {
      if (!unit) out << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace mopw::ratcore
