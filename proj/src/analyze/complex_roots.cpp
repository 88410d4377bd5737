#include "mopw/analyze/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "mopw/error.hpp"
#include "mopw/ratcore/bigfloat.hpp"
#include "mopw/ratcore/real_roots.hpp"

namespace mopw::analyze {

using ratcore::BigComplex;
using ratcore::BigFloat;
using ratcore::Rational;
using cplx = std::complex<double>;

namespace {

// p(z) and p'(z) by Horner.
template <class T, class C>
std::pair<T, T> horner(const std::vector<C>& c, const T& z, const T& zero) {
  T v = zero;
  T d = zero;
  for (std::size_t k = c.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + T(c[k]);
  }
  return {v, d};
}

// Power of two close to the geometric mean root modulus |a_0 / a_n|^{1/n}
// of the part of p without roots at 0.
long variable_scale_exponent(const std::vector<Rational>& c) {
  const std::size_t n = c.size() - 1;
  double log2_ratio = std::log2(std::abs(c.front().get_d())) - std::log2(std::abs(c.back().get_d()));
  if (!std::isfinite(log2_ratio)) {
    const BigFloat ratio(Rational(abs(c.front()) / abs(c.back())), 64);
    log2_ratio = static_cast<double>(ratio.exponent());
  }
  return std::lround(log2_ratio / static_cast<double>(n));
}

struct Aberth {
  std::vector<cplx> z;
  bool converged = false;
};

Aberth aberth_double(const std::vector<double>& c, int max_iterations) {
  const std::size_t n = c.size() - 1;
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(c[k] / c[n]), 1.0 / double(n - k)));
  radius = std::clamp(radius, 0.5, 4.0);
  Aberth a;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * double(k) / double(n) + 0.4;
    const double r = radius * (1.0 + 0.05 * std::sin(3.7 * double(k) + 1.3));
    a.z.emplace_back(r * std::cos(theta), r * std::sin(theta));
  }
  const cplx zero(0.0, 0.0);
  for (int it = 0; it < max_iterations; ++it) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      auto [v, d] = horner<cplx, double>(c, a.z[i], zero);
      if (v == zero) continue;
      const cplx ratio = v / d;
      cplx repulsion = zero;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (a.z[i] - a.z[j]);
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      a.z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(a.z[i])));
    }
    if (max_step < 1e-14) {
      a.converged = true;
      break;
    }
  }
  return a;
}

struct BigAberth {
  std::vector<BigComplex> z;
  std::vector<double> relative_residual;
};

double relative_residual(const std::vector<BigFloat>& c, const BigComplex& z, long bits) {
  const BigFloat zero(bits);
  const BigComplex czero(zero, zero);
  BigComplex v = czero;
  BigFloat m = zero;
  const BigFloat modulus = z.modulus();
  for (std::size_t k = c.size(); k-- > 0;) {
    v = v * z + BigComplex(c[k], zero);
    m = m * modulus + abs(c[k]);
  }
  if (m.sign() == 0) return 0.0;
  return (v.modulus() / m).to_double();
}

BigAberth aberth_refine(const std::vector<BigFloat>& c, const std::vector<cplx>& start, long bits) {
  const std::size_t n = start.size();
  const BigFloat zero(bits);
  const BigComplex czero(zero, zero);
  const BigComplex one(BigFloat(1.0, bits), zero);
  BigAberth a;
  for (const auto& s : start) a.z.emplace_back(BigFloat(s.real(), bits), BigFloat(s.imag(), bits));
  // quadratic convergence from double-accurate starts: a handful of sweeps
  // reaches the working precision; a few more cover clustered roots
  for (int sweep = 0; sweep < 40; ++sweep) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      BigComplex v = czero;
      BigComplex d = czero;
      for (std::size_t k = c.size(); k-- > 0;) {
        d = d * a.z[i] + v;
        v = v * a.z[i] + BigComplex(c[k], zero);
      }
      if (v.re.sign() == 0 && v.im.sign() == 0) continue;
      const BigComplex ratio = v / d;
      BigComplex repulsion = czero;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion = repulsion + one / (a.z[i] - a.z[j]);
      const BigComplex step = ratio / (one - ratio * repulsion);
      if (!step.re.is_finite() || !step.im.is_finite()) continue;
      a.z[i] = a.z[i] - step;
      const BigFloat size = a.z[i].modulus();
      const double rel = (step.modulus() / (size < BigFloat(1.0, bits) ? BigFloat(1.0, bits) : size)).to_double();
      worst = std::max(worst, rel);
    }
    if (worst < std::ldexp(1.0, -static_cast<int>(bits) / 2)) break;
  }
  for (const auto& z : a.z) a.relative_residual.push_back(relative_residual(c, z, bits));
  return a;
}

void symmetrize(std::vector<cplx>& roots, std::size_t real_count, bool exact_real_count) {
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto im_size = [&](std::size_t i) { return std::abs(roots[i].imag()) / std::max(1.0, std::abs(roots[i])); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return im_size(a) < im_size(b); });
  std::vector<bool> done(roots.size(), false);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t i = order[r];
    const bool real = exact_real_count ? r < real_count : im_size(i) < 1e-12;
    if (!real) break;
    roots[i] = {roots[i].real(), 0.0};
    done[i] = true;
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (done[i]) continue;
    std::size_t best = roots.size();
    double best_dist = HUGE_VAL;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || done[j]) continue;
      const double dist = std::abs(roots[j] - std::conj(roots[i]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    done[i] = true;
    if (best == roots.size()) {
      roots[i] = {roots[i].real(), 0.0};
      continue;
    }
    const cplx upper = roots[i].imag() >= 0 ? roots[i] : roots[best];
    const cplx lower = roots[i].imag() >= 0 ? roots[best] : roots[i];
    const cplx mean = 0.5 * (upper + std::conj(lower));
    roots[i] = roots[i].imag() >= 0 ? mean : std::conj(mean);
    roots[best] = std::conj(roots[i]);
    done[best] = true;
  }
}

}  // namespace

RootSet complex_roots(const Poly& p, const RootOptions& options) {
  if (p.degree() < 1) throw ValidationError("root finding needs degree >= 1");
  RootSet out;
  out.degree = p.degree();
  Rational max_mag = 0;
  for (const auto& c : p.coeffs()) max_mag = std::max(max_mag, Rational(abs(c)));
  out.residual_scale = BigFloat(max_mag, 64).to_double();

  // roots at zero are exact
  const auto all = p.coeffs();
  std::size_t zeros = 0;
  while (all[zeros] == 0) ++zeros;
  std::vector<Rational> c(all.begin() + static_cast<long>(zeros), all.end());
  std::vector<cplx> roots(zeros, cplx(0.0, 0.0));
  double worst_residual = 0.0;

  if (c.size() > 1) {
    const long shift = variable_scale_exponent(c);
    const long bits = options.precision_bits;
    // q(y) = p(2^shift y) / max |coeff|
    std::vector<Rational> scaled(c.size());
    Rational big = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      Rational factor = ratcore::power(Rational(2), static_cast<int>(shift * static_cast<long>(k)));
      scaled[k] = c[k] * factor;
      big = std::max(big, Rational(abs(scaled[k])));
    }
    std::vector<double> cd;
    std::vector<BigFloat> cb;
    for (auto& s : scaled) {
      s /= big;
      cd.push_back(s.get_d());
      cb.emplace_back(s, bits);
    }
    const Aberth first = aberth_double(cd, options.max_iterations);
    const BigAberth refined = aberth_refine(cb, first.z, bits);
    for (std::size_t i = 0; i < refined.z.size(); ++i) {
      const BigFloat re = ldexp(refined.z[i].re, shift);
      const BigFloat im = ldexp(refined.z[i].im, shift);
      roots.emplace_back(re.to_double(), im.to_double());
      worst_residual = std::max(worst_residual, refined.relative_residual[i]);
    }
    if (!(worst_residual <= options.tol)) {
      throw NumericalError("root iteration did not converge: worst relative residual " +
                           std::to_string(worst_residual) + " over " + std::to_string(roots.size()) + " roots");
    }
  }
  out.max_relative_residual = worst_residual;

  const Poly sqf = ratcore::square_free_part(p);
  const bool square_free = sqf.degree() == p.degree();
  const std::size_t real_count =
      square_free ? static_cast<std::size_t>(ratcore::sturm_count(p, ratcore::Bound::negative_infinity(),
                                                                  ratcore::Bound::positive_infinity()))
                  : 0;
  symmetrize(roots, real_count, square_free);
  std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  out.roots = std::move(roots);
  return out;
}

void write_roots_csv(std::ostream& out, const std::vector<std::pair<std::string, RootSet>>& series) {
  out << "re,im,series\n";
  char buf[64];
  for (const auto& [label, set] : series) {
    for (const auto& z : set.roots) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,", z.real(), z.imag());
      out << buf << label << '\n';
    }
  }
}

}  // namespace mopw::analyze
