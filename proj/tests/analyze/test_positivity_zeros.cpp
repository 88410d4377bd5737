#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "mopw/analyze/positivity.hpp"
#include "mopw/analyze/real_zeros.hpp"
#include "mopw/error.hpp"
#include "mopw/wronsk/wronskian.hpp"

using namespace mopw;
using namespace mopw::analyze;
using mopw::testing::poly;
using mopw::testing::q;

namespace {

// A refutation must exhibit p <= 0 in the domain, or enclose a real zero.
void check_witness(const Poly& p, const PositivityResult& r) {
  REQUIRE(r.refutation.has_value());
  const auto& w = *r.refutation;
  if (r.domain == Domain::PositiveHalfLine) CHECK(w.point > 0);
  CHECK(w.value == ratcore::evaluate(p, w.point));
  if (w.zero_enclosure) {
    if (r.domain == Domain::PositiveHalfLine) CHECK(w.zero_enclosure->lo >= 0);
    CHECK(ratcore::sturm_count(p, w.zero_enclosure->lo, w.zero_enclosure->hi) == 1);
  } else {
    CHECK(w.value <= 0);
  }
}

}  // namespace

TEST_CASE("certify_positive examples") {
  auto r = certify_positive(poly({1, 0, 1}), Domain::RealLine);
  REQUIRE(r.certified());
  CHECK(r.certificate->real_root_count_in_domain == 0);
  CHECK(r.certificate->sample_sign == 1);
  CHECK(r.certificate->leading_sign == 1);

  r = certify_positive(poly({q(-1, 2), 0, 1}), Domain::RealLine);
  CHECK_FALSE(r.certified());
  check_witness(poly({q(-1, 2), 0, 1}), r);

  const Poly quintic = mopw::testing::laguerre_turan_quintic();
  r = certify_positive(quintic, Domain::PositiveHalfLine);
  CHECK_FALSE(r.certified());
  check_witness(quintic, r);
  CHECK(r.sign_at_zero == -1);

  CHECK_THROWS_AS(certify_positive(Poly(), Domain::RealLine), ValidationError);
}

TEST_CASE("certify_positive on the half line") {
  auto r = certify_positive(poly({1, 1}), Domain::PositiveHalfLine);
  CHECK(r.certified());
  CHECK(r.sign_at_zero == 1);

  // x > 0 on (0, inf) although x(0) = 0
  r = certify_positive(poly({0, 1}), Domain::PositiveHalfLine);
  CHECK(r.certified());
  CHECK(r.sign_at_zero == 0);

  // roots 0.146.. and 0.853..: negative between them
  const Poly dip = poly({q(1, 8), -1, 1});
  r = certify_positive(dip, Domain::PositiveHalfLine);
  CHECK_FALSE(r.certified());
  check_witness(dip, r);

  // the only positive zero sits close to 0, inside the straddling interval
  const Poly near_zero = poly({q(-1, 1000), 1}) * poly({1, 1});
  r = certify_positive(near_zero, Domain::PositiveHalfLine);
  CHECK_FALSE(r.certified());
  check_witness(near_zero, r);

  // negative zeros only
  r = certify_positive(poly({2, 3, 1}), Domain::PositiveHalfLine);
  CHECK(r.certified());
  CHECK_FALSE(certify_positive(poly({2, 3, 1}), Domain::RealLine).certified());

  r = certify_positive(poly({-1}), Domain::PositiveHalfLine);
  CHECK_FALSE(r.certified());
  check_witness(poly({-1}), r);
}

TEST_CASE("certify_positive with touching zeros") {
  // rational double zero: p(1) = 0 is a witness
  const Poly rational = poly({-1, 1}) * poly({-1, 1}) * poly({1, 0, 1});
  auto r = certify_positive(rational, Domain::RealLine);
  CHECK_FALSE(r.certified());
  check_witness(rational, r);

  // (x^2 - 2)^2 > 0 at every rational point
  const Poly irrational = poly({-2, 0, 1}) * poly({-2, 0, 1});
  r = certify_positive(irrational, Domain::RealLine);
  CHECK_FALSE(r.certified());
  check_witness(irrational, r);
  CHECK(r.refutation->zero_enclosure.has_value());
}

TEST_CASE("certify_positive agrees with dense sampling") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = mopw::testing::random_poly(rng, 5);
    if (p.is_zero()) continue;
    if (trial % 3 == 0) p = p * p + Poly::constant(q(1, 100));
    for (Domain d : {Domain::RealLine, Domain::PositiveHalfLine}) {
      const auto r = certify_positive(p, d);
      if (r.certified()) {
        for (int k = -400; k <= 400; ++k) {
          const Rational x = q(k, 40);
          if (d == Domain::PositiveHalfLine && x <= 0) continue;
          CHECK(ratcore::evaluate(p, x) > 0);
        }
      } else {
        check_witness(p, r);
      }
    }
  }
}

TEST_CASE("positivity JSON") {
  const auto j = to_json(certify_positive(mopw::testing::laguerre_turan_quintic(), Domain::PositiveHalfLine));
  CHECK(j["ok"] == false);
  CHECK(j["domain"] == "(0,inf)");
  CHECK(j["sign_at_zero"] == -1);
  CHECK(j["witness"].contains("point"));
  CHECK(to_json(certify_positive(poly({1, 0, 1}), Domain::RealLine))["witness"].is_null());
  CHECK(parse_domain("R") == Domain::RealLine);
  CHECK(parse_domain("(0,inf)") == Domain::PositiveHalfLine);
  CHECK_THROWS_AS(parse_domain("C"), ValidationError);
}

TEST_CASE("real_zero_profile examples") {
  const auto h = mop::WeightFamily::hermite({q(1, 3), q(2, 5)});
  auto z = real_zero_profile(wronsk::wronskian(h, mop::straight_path(mop::MultiIndex({2, 3}), 3)));
  CHECK(z.count == 5);
  CHECK(z.simple);
  for (const auto& iv : z.intervals) CHECK(iv.width() <= default_interval_width());

  z = real_zero_profile(wronsk::wronskian(h, mop::straight_path(mop::MultiIndex({0, 0}), 3)));
  CHECK(z.count == 0);
  CHECK(z.simple);

  const Poly repeated = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  z = real_zero_profile(repeated);
  CHECK(z.count == 2);
  CHECK_FALSE(z.simple);
  CHECK(z.intervals[0].contains(-2));
  CHECK(z.intervals[1].contains(1));

  z = real_zero_profile(poly({-2, 0, 1}), q(1, 1000000));
  REQUIRE(z.count == 2);
  CHECK(z.intervals[1].width() <= q(1, 1000000));
  CHECK(z.intervals[1].lo * z.intervals[1].lo < 2);
  CHECK(z.intervals[1].hi * z.intervals[1].hi > 2);

  CHECK_THROWS_AS(real_zero_profile(Poly()), ValidationError);
  CHECK(to_json(real_zero_profile(poly({0, 1})))["count"] == 1);
}

TEST_CASE("interlacing_check examples") {
  CHECK(interlacing_check(poly({0, 1}), poly({-1, 0, 1})).ok);
  CHECK(interlacing_check(poly({-1, 0, 1}), poly({0, 1})).ok);

  auto r = interlacing_check(poly({-1, 0, 1}), poly({-4, 0, 1}));
  CHECK_FALSE(r.ok);

  r = interlacing_check(poly({0, 1}) * poly({-1, 1}), poly({-2, 1}));
  CHECK_FALSE(r.ok);
  CHECK(r.witness["reason"] == "consecutive zeros of one polynomial");

  r = interlacing_check(poly({0, 1}), poly({0, 1}) * poly({-1, 1}));
  CHECK_FALSE(r.ok);
  CHECK(r.witness["reason"] == "shared zero");

  r = interlacing_check(poly({-1, 1}) * poly({-1, 1}), poly({0, 1}));
  CHECK_FALSE(r.ok);
  CHECK(r.witness["reason"] == "repeated zero");

  // zeros a millionth apart still separate
  CHECK(interlacing_check(poly({q(-1, 1000000), 1}), poly({0, 1}) * poly({-1, 1})).ok);
  CHECK(interlacing_check(poly({-2, 0, 1}), poly({q(-1, 10), 1}) * poly({-3, 0, 1}) * poly({q(-141421, 100000), 1})).ok ==
        false);
}

TEST_CASE("interlacing of consecutive Wronskians") {
  const auto h = mop::WeightFamily::hermite({q(1, 3), q(2, 5)});
  mop::Type2Table t(h);
  const mop::PathSpec a{mop::MultiIndex({2, 3}), {1, 1}};
  const mop::PathSpec b = mop::shifted_path(a, 1);
  CHECK(b.start == mop::MultiIndex({3, 3}));
  CHECK(interlacing_check(wronsk::wronskian(t, a), wronsk::wronskian(t, b)).ok);
}
