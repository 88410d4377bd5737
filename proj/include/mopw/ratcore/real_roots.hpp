#pragma once

#include <vector>

#include "mopw/ratcore/poly.hpp"
#include "mopw/ratcore/rational.hpp"

namespace mopw::ratcore {

/// A point of the extended real line with rational finite part.
class Bound {
 public:
  enum class Kind { NegativeInfinity, Finite, PositiveInfinity };

  Bound(const Rational& value) : kind_(Kind::Finite), value_(value) {}  // NOLINT(google-explicit-constructor)
  Bound(int value) : Bound(Rational(value)) {}                           // NOLINT(google-explicit-constructor)

  static Bound negative_infinity() { return Bound(Kind::NegativeInfinity); }
  static Bound positive_infinity() { return Bound(Kind::PositiveInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Finite value; meaningless for infinite bounds.
  const Rational& value() const { return value_; }

  friend bool operator<(const Bound& a, const Bound& b);

 private:
  explicit Bound(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

/// Open interval (lo, hi) holding exactly one real root of an associated
/// polynomial, whose square-free part is nonzero with opposite signs at lo and
/// hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
};

/// Sign of p at a point of the extended real line.
int sign_at(const Poly& p, const Bound& x);

/// Sturm sequence of the square-free part of p; the first entry is the
/// square-free part itself. Each entry is scaled by a positive constant only.
std::vector<Poly> sturm_sequence(const Poly& p);

/// Number of distinct real roots of p in (lo, hi]. Throws for p == 0 or
/// lo >= hi.
int sturm_count(const Poly& p, const Bound& lo, const Bound& hi);

/// Disjoint isolating intervals in increasing order, one per distinct real
/// root of p. Throws for p == 0.
std::vector<RationalInterval> isolate_real_roots(const Poly& p);

/// Bisects an isolating interval of p until its width is at most max_width.
RationalInterval refine(const Poly& p, RationalInterval interval, const Rational& max_width);

/// Strict upper bound on the modulus of every complex root of p (Cauchy),
/// rounded up to a power of two.
Rational root_bound(const Poly& p);

}  // namespace mopw::ratcore
