#include "mopw/analyze/positivity.hpp"

#include "mopw/error.hpp"

namespace mopw::analyze {

using ratcore::Bound;

const char* to_string(Domain d) { return d == Domain::RealLine ? "R" : "(0,inf)"; }

Domain parse_domain(const std::string& text) {
  if (text == "R" || text == "real") return Domain::RealLine;
  if (text == "(0,inf)" || text == "positive") return Domain::PositiveHalfLine;
  throw ValidationError("unknown domain '" + text + "'");
}

namespace {

// One rational point strictly inside every gap between consecutive real
// roots (and beyond the extreme ones), restricted to the domain.
std::vector<Rational> gap_points(const std::vector<RationalInterval>& roots, Domain domain) {
  std::vector<Rational> points;
  const bool half = domain == Domain::PositiveHalfLine;
  if (roots.empty()) {
    points.push_back(half ? Rational(1) : Rational(0));
    return points;
  }
  if (!half) {
    points.push_back(roots.front().lo - 1);
  } else {
    points.push_back(roots.front().lo / 2);
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const Rational gap = (roots[i].hi + roots[i + 1].lo) / 2;
    if (!half || gap > 0) points.push_back(gap);
  }
  points.push_back(roots.back().hi + 1);
  return points;
}

}  // namespace

PositivityResult certify_positive(const Poly& p, Domain domain) {
  if (p.is_zero()) throw ValidationError("positivity of the zero polynomial");
  PositivityResult result{domain, std::nullopt, std::nullopt, ratcore::sign(ratcore::evaluate(p, Rational(0)))};
  const Bound lo = domain == Domain::RealLine ? Bound::negative_infinity() : Bound(0);
  const int count = ratcore::sturm_count(p, lo, Bound::positive_infinity());

  if (count == 0) {
    const Rational sample = domain == Domain::RealLine ? Rational(0) : Rational(1);
    const Rational value = ratcore::evaluate(p, sample);
    if (value > 0) {
      result.certificate = PositivityCertificate{domain, 0, sample, 1, ratcore::sign(p.leading())};
    } else {
      result.refutation = Refutation{sample, value, std::nullopt};
    }
    return result;
  }

  std::vector<RationalInterval> roots;
  for (const auto& r : ratcore::isolate_real_roots(p))
    if (domain == Domain::RealLine || r.hi > 0) roots.push_back(r);
  // an isolating interval may straddle 0; keep it only if its root is
  // positive, and shrink it into (0, inf) so the gap below it is sampled
  if (domain == Domain::PositiveHalfLine && !roots.empty() && roots.front().lo <= 0) {
    const Poly sqf = ratcore::square_free_part(p);
    const int at_zero = ratcore::sign(ratcore::evaluate(sqf, Rational(0)));
    if (at_zero == 0 || at_zero == ratcore::sign(ratcore::evaluate(sqf, roots.front().hi))) {
      roots.erase(roots.begin());
    } else {
      while (roots.front().lo <= 0) roots.front() = ratcore::refine(p, roots.front(), roots.front().width() / 2);
    }
  }
  for (const auto& x : gap_points(roots, domain)) {
    const Rational value = ratcore::evaluate(p, x);
    if (value <= 0) {
      result.refutation = Refutation{x, value, std::nullopt};
      return result;
    }
  }
  // p > 0 between its roots: every root touches zero from above
  for (const auto& r : roots) {
    const Rational mid = r.midpoint();
    const Rational value = ratcore::evaluate(p, mid);
    if (value <= 0) {
      result.refutation = Refutation{mid, value, std::nullopt};
      return result;
    }
  }
  const auto& r = roots.front();
  result.refutation = Refutation{r.midpoint(), ratcore::evaluate(p, r.midpoint()), r};
  return result;
}

nlohmann::json to_json(const PositivityResult& r) {
  nlohmann::json out{{"domain", to_string(r.domain)}, {"ok", r.certified()}};
  if (r.certificate) {
    out["certificate"] = {{"real_root_count_in_domain", r.certificate->real_root_count_in_domain},
                          {"sample_point", ratcore::to_string(r.certificate->sample_point)},
                          {"sample_sign", r.certificate->sample_sign},
                          {"leading_sign", r.certificate->leading_sign}};
  }
  if (r.refutation) {
    nlohmann::json w{{"point", ratcore::to_string(r.refutation->point)},
                     {"value", ratcore::to_string(r.refutation->value)}};
    if (r.refutation->zero_enclosure) {
      w["zero_enclosure"] = {ratcore::to_string(r.refutation->zero_enclosure->lo),
                             ratcore::to_string(r.refutation->zero_enclosure->hi)};
    }
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  if (r.domain == Domain::PositiveHalfLine) out["sign_at_zero"] = r.sign_at_zero;
  return out;
}

}  // namespace mopw::analyze
