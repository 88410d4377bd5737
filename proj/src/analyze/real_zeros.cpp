#include "mopw/analyze/real_zeros.hpp"

#include <algorithm>

#include "mopw/error.hpp"

namespace mopw::analyze {

namespace {

nlohmann::json interval_json(const RationalInterval& r) {
  return {ratcore::to_string(r.lo), ratcore::to_string(r.hi)};
}

}  // namespace

Rational default_interval_width() { return ratcore::power(Rational(2), -20); }

ZeroProfile real_zero_profile(const Poly& p, const Rational& max_width) {
  if (p.is_zero()) throw ValidationError("zero profile of the zero polynomial");
  ZeroProfile z;
  z.simple = ratcore::gcd(p, ratcore::derivative(p)).degree() == 0;
  for (const auto& r : ratcore::isolate_real_roots(p)) z.intervals.push_back(ratcore::refine(p, r, max_width));
  z.count = static_cast<int>(z.intervals.size());
  return z;
}

nlohmann::json to_json(const ZeroProfile& z) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& r : z.intervals) intervals.push_back(interval_json(r));
  return {{"count", z.count}, {"simple", z.simple}, {"intervals", intervals}};
}

wronsk::CheckResult interlacing_check(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw ValidationError("interlacing of the zero polynomial");
  for (const Poly* f : {&p, &q}) {
    if (ratcore::gcd(*f, ratcore::derivative(*f)).degree() > 0)
      return {false, {{"reason", "repeated zero"}, {"poly", f == &p ? "p" : "q"}}};
  }
  const Poly common = ratcore::gcd(p, q);
  if (common.degree() > 0) {
    const auto shared = ratcore::isolate_real_roots(common);
    if (!shared.empty()) return {false, {{"reason", "shared zero"}, {"interval", interval_json(shared.front())}}};
  }

  struct Owned {
    RationalInterval iv;
    int owner;
  };
  std::vector<Owned> all;
  for (const auto& r : ratcore::isolate_real_roots(p)) all.push_back({r, 0});
  for (const auto& r : ratcore::isolate_real_roots(q)) all.push_back({r, 1});
  const int np = static_cast<int>(std::count_if(all.begin(), all.end(), [](const Owned& o) { return o.owner == 0; }));
  const int nq = static_cast<int>(all.size()) - np;

  // no shared real zero, so halving both members of an overlapping pair
  // separates them eventually
  auto by_lo = [](const Owned& a, const Owned& b) { return a.iv.lo < b.iv.lo; };
  while (true) {
    std::sort(all.begin(), all.end(), by_lo);
    bool overlap = false;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i + 1].iv.lo < all[i].iv.hi) {
        overlap = true;
        for (auto* o : {&all[i], &all[i + 1]}) o->iv = ratcore::refine(o->owner == 0 ? p : q, o->iv, o->iv.width() / 2);
      }
    }
    if (!overlap) break;
  }

  if (std::abs(np - nq) != 1) return {false, {{"reason", "zero counts do not differ by one"}, {"counts", {np, nq}}}};
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i].owner == all[i + 1].owner) {
      return {false,
              {{"reason", "consecutive zeros of one polynomial"},
               {"poly", all[i].owner == 0 ? "p" : "q"},
               {"intervals", {interval_json(all[i].iv), interval_json(all[i + 1].iv)}}}};
    }
  }
  return {};
}

}  // namespace mopw::analyze
