#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support.hpp"
#include "mopw/error.hpp"
#include "mopw/ratcore/real_roots.hpp"

using namespace mopw;
using namespace mopw::ratcore;
using mopw::testing::laguerre_turan_quintic;
using mopw::testing::poly;
using mopw::testing::q;

namespace {

const Bound kNegInf = Bound::negative_infinity();
const Bound kPosInf = Bound::positive_infinity();

}  // namespace

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(poly({1, 0, 1}), kNegInf, kPosInf) == 0);
  CHECK(sturm_count(poly({q(-1, 2), 0, 1}), kNegInf, kPosInf) == 2);
  // Exactly one sign change on the positive axis (near 0.2519).
  CHECK(sturm_count(laguerre_turan_quintic(), 0, kPosInf) == 1);
  CHECK(sturm_count(laguerre_turan_quintic(), kNegInf, kPosInf) == 1);
  CHECK_THROWS_AS(sturm_count(Poly(), kNegInf, kPosInf), ValidationError);
  CHECK_THROWS_AS(sturm_count(poly({1, 1}), 1, 1), ValidationError);
}

TEST_CASE("sturm_count is half-open on the left") {
  const Poly p = poly({-1, 0, 1});  // roots -1, 1
  CHECK(sturm_count(p, -1, 1) == 1);
  CHECK(sturm_count(p, Rational(-2), -1) == 1);
  CHECK(sturm_count(p, 1, 2) == 0);
  // multiplicity collapses
  const Poly m = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  CHECK(sturm_count(m, kNegInf, kPosInf) == 2);
}

TEST_CASE("isolate_real_roots examples") {
  auto iv = isolate_real_roots(poly({q(-1, 2), 0, 1}));
  REQUIRE(iv.size() == 2);
  CHECK(iv[0].hi <= 0);
  CHECK(iv[1].lo >= 0);

  iv = isolate_real_roots(poly({0, 0, 0, 1}));
  REQUIRE(iv.size() == 1);
  CHECK(iv[0].contains(0));

  // x^2 - x/2 - 1/2 = (x - 1)(x + 1/2)
  iv = isolate_real_roots(poly({q(-1, 2), q(-1, 2), 1}));
  REQUIRE(iv.size() == 2);
  CHECK(iv[0].contains(q(-1, 2)));
  CHECK(iv[1].contains(1));

  CHECK(isolate_real_roots(Poly::constant(3)).empty());
  CHECK_THROWS_AS(isolate_real_roots(Poly()), ValidationError);
}

TEST_CASE("refine shrinks and keeps the root") {
  const Poly p = poly({-2, 0, 1});
  for (auto iv : isolate_real_roots(p)) {
    const auto r = refine(p, iv, power(q(1, 2), 30));
    CHECK(r.width() <= power(q(1, 2), 30));
    CHECK(sign(evaluate(p, r.lo)) * sign(evaluate(p, r.hi)) < 0);
  }
  // root hit exactly by a bisection midpoint
  const Poly lin = poly({-1, 1});
  const auto r = refine(lin, {0, 2}, q(1, 8));
  CHECK(r.contains(1));
  CHECK(r.width() <= q(1, 8));
}

TEST_CASE("root counts on polynomials with known factorizations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> real_roots;
    Poly p = Poly::constant(mopw::testing::random_rational(rng) + 7);
    const int linear = static_cast<int>(rng() % 5);
    const int pairs = static_cast<int>(rng() % 3);
    for (int i = 0; i < linear; ++i) {
      const Rational r = mopw::testing::random_rational(rng);
      real_roots.push_back(r);
      const int mult = 1 + static_cast<int>(rng() % 2);
      for (int k = 0; k < mult; ++k) p *= Poly({Rational(-r), 1});
    }
    for (int i = 0; i < pairs; ++i) {
      // (x - a)^2 + b^2 with b != 0
      const Rational a = mopw::testing::random_rational(rng);
      Rational b = mopw::testing::random_rational(rng);
      if (b == 0) b = 1;
      p *= Poly({Rational(a * a + b * b), Rational(-2 * a), 1});
    }
    std::sort(real_roots.begin(), real_roots.end());
    real_roots.erase(std::unique(real_roots.begin(), real_roots.end()), real_roots.end());
    const int expected = static_cast<int>(real_roots.size());

    const int count = sturm_count(p, kNegInf, kPosInf);
    CHECK(count == expected);
    CHECK(count <= p.degree());
    const Poly sqf = square_free_part(p);
    CHECK((sqf.degree() - count) % 2 == 0);

    const auto iv = isolate_real_roots(p);
    REQUIRE(static_cast<int>(iv.size()) == count);
    for (std::size_t i = 0; i < iv.size(); ++i) {
      CHECK(iv[i].lo < iv[i].hi);
      CHECK(sign(evaluate(sqf, iv[i].lo)) * sign(evaluate(sqf, iv[i].hi)) < 0);
      CHECK(iv[i].contains(real_roots[i]));
      if (i > 0) CHECK(iv[i - 1].hi <= iv[i].lo);
    }
  }
}
