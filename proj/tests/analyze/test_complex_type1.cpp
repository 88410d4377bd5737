#include <doctest.h>

#include <cmath>
#include <sstream>

#include "../support.hpp"
#include "mopw/analyze/complex_roots.hpp"
#include "mopw/analyze/real_zeros.hpp"
#include "mopw/analyze/type1_sign.hpp"
#include "mopw/error.hpp"
#include "mopw/mop/construct.hpp"
#include "mopw/ratcore/bigfloat.hpp"
#include "mopw/wronsk/wronskian.hpp"

using namespace mopw;
using namespace mopw::analyze;
using mopw::testing::poly;
using mopw::testing::q;
using cplx = std::complex<double>;

namespace {

// lead * prod (x - z_k), compared coefficientwise relative to the largest
double reconstruction_error(const Poly& p, const RootSet& s) {
  std::vector<cplx> c{cplx(p.leading().get_d())};
  for (const auto& z : s.roots) {
    std::vector<cplx> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= z * c[k];
    }
    c = next;
  }
  double scale = 0.0;
  for (const auto& a : p.coeffs()) scale = std::max(scale, std::abs(a.get_d()));
  double err = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) err = std::max(err, std::abs(c[k] - p.coeffs()[k].get_d()) / scale);
  return err;
}

bool conjugate_closed(const RootSet& s, double tol) {
  for (const auto& z : s.roots) {
    bool found = false;
    for (const auto& w : s.roots) found = found || std::abs(w - std::conj(z)) <= tol * std::max(1.0, std::abs(z));
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("complex_roots examples") {
  auto s = complex_roots(poly({1, 0, 1}));
  REQUIRE(s.roots.size() == 2);
  CHECK(s.roots[0] == cplx(0, -1));
  CHECK(s.roots[1] == cplx(0, 1));

  s = complex_roots(poly({-1, 0, 0, 1}));
  REQUIRE(s.roots.size() == 3);
  const double h = std::sqrt(3.0) / 2;
  CHECK(std::abs(s.roots[0] - cplx(-0.5, -h)) < 1e-12);
  CHECK(std::abs(s.roots[1] - cplx(-0.5, h)) < 1e-12);
  CHECK(std::abs(s.roots[2] - cplx(1, 0)) < 1e-12);
  CHECK(s.roots[2].imag() == 0.0);

  s = complex_roots(poly({0, 0, 3, 1}));
  CHECK(s.roots == std::vector<cplx>{cplx(-3, 0), cplx(0, 0), cplx(0, 0)});

  CHECK_THROWS_AS(complex_roots(Poly::constant(3)), ValidationError);
}

TEST_CASE("complex_roots on scaled and repeated inputs") {
  // roots 10^6 and 10^-6 in one polynomial
  auto s = complex_roots(poly({q(-1000000), 1}) * poly({q(-1, 1000000), 1}) * poly({1, 0, 1}));
  REQUIRE(s.roots.size() == 4);
  CHECK(s.roots[0].real() == doctest::Approx(0).epsilon(1e-15));
  CHECK(std::abs(s.roots[2].real() - 1e-6) < 1e-18);
  CHECK(std::abs(s.roots[3].real() - 1e6) < 1e-6);

  const Poly triple = poly({-1, 1}) * poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  s = complex_roots(triple);
  CHECK(s.roots.size() == 4);
  CHECK(s.max_relative_residual <= 1e-9);
  CHECK(reconstruction_error(triple, s) < 1e-9);
  CHECK(conjugate_closed(s, 1e-12));
}

TEST_CASE("complex_roots reconstruct random polynomials") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    Poly p = mopw::testing::random_poly(rng, 12);
    if (p.degree() < 1) continue;
    const auto s = complex_roots(p);
    CHECK(static_cast<int>(s.roots.size()) == p.degree());
    CHECK(s.degree == p.degree());
    CHECK(reconstruction_error(p, s) < 1e-9);
    CHECK(conjugate_closed(s, 1e-12));
  }
}

TEST_CASE("complex roots of Hermite Wronskians") {
  const auto h = mop::WeightFamily::hermite({q(1, 3), q(34, 35)});
  mop::Type2Table t(h);
  for (std::size_t l : {2, 4, 6}) {
    const Poly w = wronsk::wronskian(t, mop::straight_path(mop::MultiIndex({3, 3}), l));
    const auto s = complex_roots(w);
    CHECK(s.roots.size() == 6 * l);
    CHECK(s.max_relative_residual <= 1e-9);
    CHECK(conjugate_closed(s, 1e-12));
    if (l % 2 == 0) {
      for (const auto& z : s.roots) CHECK(std::abs(z.imag()) > 1e-8);
    }
  }
}

TEST_CASE("exact and floating real zeros agree") {
  const auto h = mop::WeightFamily::hermite({q(1, 3), q(2, 5)});
  mop::Type2Table t(h);
  for (const auto& start : {mop::MultiIndex({2, 3}), mop::MultiIndex({1, 1}), mop::MultiIndex({3, 0})}) {
    const Poly w = wronsk::wronskian(t, mop::straight_path(start, 3));
    const auto profile = real_zero_profile(w);
    const auto s = complex_roots(w);
    for (const auto& iv : profile.intervals) {
      int inside = 0;
      for (const auto& z : s.roots)
        if (std::abs(z.imag()) <= 1e-8 && z.real() > iv.lo.get_d() - 1e-12 && z.real() < iv.hi.get_d() + 1e-12)
          ++inside;
      CHECK(inside == 1);
    }
  }
}

TEST_CASE("roots CSV") {
  std::ostringstream out;
  write_roots_csv(out, {{"l=2", complex_roots(poly({1, 0, 1}))}, {"x", complex_roots(poly({q(-1, 3), 1}))}});
  CHECK(out.str() == "re,im,series\n0,-1,l=2\n0,1,l=2\n0.33333333333333331,0,x\n");
}

namespace {

ratcore::BigFloat q_value(const mop::LinearForm& form, const ratcore::BigFloat& x, long bits) {
  ratcore::BigFloat acc(bits);
  for (std::size_t j = 0; j < form.coeff_polys.size(); ++j) {
    ratcore::BigFloat a(bits);
    const auto c = form.coeff_polys[j].coeffs();
    for (std::size_t k = c.size(); k-- > 0;) a = a * x + ratcore::BigFloat(c[k], bits);
    acc = acc + a * mop::normalized_weight(form.family, j + 1, x);
  }
  return acc;
}

// Q0 Q1' - Q0' Q1 with central differences at high precision.
double finite_difference_wronskian(const mop::WeightFamily& f, const mop::PathSpec& path, const Rational& x0) {
  const long bits = 512;
  const auto idx = mop::validate_path(path);
  const auto f0 = mop::construct_type1(f, idx[0]);
  const auto f1 = mop::construct_type1(f, idx[1]);
  const ratcore::BigFloat x(x0, bits);
  const ratcore::BigFloat step = ldexp(ratcore::BigFloat(1.0, bits), -80);
  const ratcore::BigFloat two(2.0, bits);
  auto d = [&](const mop::LinearForm& form) {
    return (q_value(form, x + step, bits) - q_value(form, x - step, bits)) / (two * step);
  };
  return (q_value(f0, x, bits) * d(f1) - d(f0) * q_value(f1, x, bits)).to_double();
}

}  // namespace

TEST_CASE("type I Wronskian signs") {
  const auto h = mop::WeightFamily::hermite({q(0), q(1)});
  const mop::PathSpec path{mop::MultiIndex({1, 0}), {1}};
  const auto report = type1_wronskian_grid_sign(h, path, uniform_grid(q(-5), q(5), 50));
  CHECK(report.samples.size() == 50);
  CHECK(report.constant_sign);
  CHECK(report.sign != 0);

  // |n| = 1: one active weight
  const auto single = type1_wronskian_grid_sign(h, mop::PathSpec{mop::MultiIndex({0, 1}), {2}}, uniform_grid(q(-3), q(3), 13));
  CHECK(single.constant_sign);

  const auto lag = mop::WeightFamily::laguerre_first({q(1, 2), q(1, 3)});
  CHECK_THROWS_AS(type1_wronskian_grid_sign(lag, path, uniform_grid(q(0), q(4), 5)), ValidationError);
  const auto lag_report = type1_wronskian_grid_sign(lag, mop::PathSpec{mop::MultiIndex({1, 1}), {1}}, uniform_grid(q(1, 10), q(8), 30));
  CHECK(lag_report.constant_sign);

  const auto lag2 = mop::WeightFamily::laguerre_second(q(1, 2), {q(2), q(3, 5)});
  CHECK(type1_wronskian_grid_sign(lag2, mop::PathSpec{mop::MultiIndex({1, 1}), {2, 1, 1}}, uniform_grid(q(1, 10), q(8), 20))
            .constant_sign);

  CHECK(to_json(report)["heuristic"] == true);
  CHECK_THROWS_AS(uniform_grid(q(1), q(1), 3), ValidationError);
}

TEST_CASE("type I Wronskian values match finite differences") {
  const std::vector<std::pair<mop::WeightFamily, mop::PathSpec>> cases{
      {mop::WeightFamily::hermite({q(0), q(1)}), mop::PathSpec{mop::MultiIndex({1, 1}), {2}}},
      {mop::WeightFamily::laguerre_first({q(1, 2), q(1, 3)}), mop::PathSpec{mop::MultiIndex({2, 1}), {1}}},
      {mop::WeightFamily::laguerre_second(q(1, 2), {q(2), q(3, 5)}), mop::PathSpec{mop::MultiIndex({1, 2}), {1}}}};
  for (const auto& [family, path] : cases) {
    for (const auto& x : {q(1, 3), q(7, 4), q(3)}) {
      const auto report = type1_wronskian_grid_sign(family, path, {x});
      const double exact = std::stod(report.samples[0].value);
      const double fd = finite_difference_wronskian(family, path, x);
      CHECK(exact == doctest::Approx(fd).epsilon(1e-10));
    }
  }
}
