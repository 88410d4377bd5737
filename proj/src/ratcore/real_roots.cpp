#include "mopw/ratcore/real_roots.hpp"

#include "mopw/error.hpp"

namespace mopw::ratcore {

bool operator<(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.is_finite() && a.value_ < b.value_;
}

int sign_at(const Poly& p, const Bound& x) {
  if (p.is_zero()) return 0;
  switch (x.kind()) {
    case Bound::Kind::Finite:
      return sign(evaluate(p, x.value()));
    case Bound::Kind::PositiveInfinity:
      return sign(p.leading());
    case Bound::Kind::NegativeInfinity:
      return (p.degree() % 2 == 0) ? sign(p.leading()) : -sign(p.leading());
  }
  return 0;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  if (p.is_zero()) throw ValidationError("Sturm sequence of the zero polynomial");
  std::vector<Poly> seq;
  seq.push_back(square_free_part(p));
  if (seq.back().degree() < 1) return seq;
  seq.push_back(make_monic(derivative(seq.front())));
  while (true) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // -rem scaled by |lc| keeps the sign pattern intact
    seq.push_back(-r / abs(r.leading()));
  }
  return seq;
}

namespace {

int variations(const std::vector<Poly>& seq, const Bound& x) {
  int count = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int count_in(const std::vector<Poly>& seq, const Bound& lo, const Bound& hi) {
  return variations(seq, lo) - variations(seq, hi);
}

// Picks a split point strictly inside (lo, hi) where sqf does not vanish.
Rational split_point(const Poly& sqf, const Rational& lo, const Rational& hi) {
  const Rational mid = (lo + hi) / 2;
  if (evaluate(sqf, mid) != 0) return mid;
  Rational offset = (hi - lo) / 4;
  while (true) {
    if (evaluate(sqf, mid + offset) != 0) return mid + offset;
    if (evaluate(sqf, mid - offset) != 0) return mid - offset;
    offset /= 2;
  }
}

void isolate(const std::vector<Poly>& seq, const Rational& lo, const Rational& hi, int count,
             std::vector<RationalInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = split_point(seq.front(), lo, hi);
  const int left = count_in(seq, lo, mid);
  isolate(seq, lo, mid, left, out);
  isolate(seq, mid, hi, count - left, out);
}

}  // namespace

int sturm_count(const Poly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw ValidationError("root count of the zero polynomial");
  if (!(lo < hi)) throw ValidationError("root count needs lo < hi");
  return count_in(sturm_sequence(p), lo, hi);
}

Rational root_bound(const Poly& p) {
  if (p.is_zero()) throw ValidationError("root bound of the zero polynomial");
  Rational m = 0;
  for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
    const Rational r = abs(p.coeffs()[k] / p.leading());
    if (r > m) m = r;
  }
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

std::vector<RationalInterval> isolate_real_roots(const Poly& p) {
  const auto seq = sturm_sequence(p);
  std::vector<RationalInterval> out;
  if (seq.front().degree() < 1) return out;
  const Rational b = root_bound(seq.front());
  const int total = count_in(seq, Rational(-b), b);
  isolate(seq, Rational(-b), b, total, out);
  return out;
}

RationalInterval refine(const Poly& p, RationalInterval interval, const Rational& max_width) {
  if (max_width <= 0) throw ValidationError("refinement width must be positive");
  const Poly sqf = square_free_part(p);
  int s_lo = sign(evaluate(sqf, interval.lo));
  while (interval.width() > max_width) {
    const Rational mid = interval.midpoint();
    const int s_mid = sign(evaluate(sqf, mid));
    if (s_mid == 0) {
      const Rational quarter = interval.width() / 4;
      const Rational half_target = max_width / 4;
      const Rational delta = quarter < half_target ? quarter : half_target;
      return {mid - delta, mid + delta};
    }
    if (s_mid == s_lo) {
      interval.lo = mid;
    } else {
      interval.hi = mid;
    }
  }
  return interval;
}

}  // namespace mopw::ratcore
