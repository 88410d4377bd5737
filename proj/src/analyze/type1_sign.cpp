#include "mopw/analyze/type1_sign.hpp"

#include <algorithm>

#include "mopw/error.hpp"
#include "mopw/mop/construct.hpp"
#include "mopw/ratcore/bigfloat.hpp"

namespace mopw::analyze {

using ratcore::BigFloat;
using ratcore::Poly;

namespace {

// numer(x) / x^shift
struct Laurent {
  Poly numer;
  unsigned shift = 0;
};

// w_j'/w_j = (a + b x) / x^s with s in {0, 1}.
struct LogDerivative {
  Poly numer;
  unsigned shift;
};

LogDerivative log_derivative(const mop::WeightFamily& family, std::size_t j) {
  return std::visit(
      [&](const auto& kind) -> LogDerivative {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, mop::Hermite>) {
          return {Poly({kind.c[j - 1], Rational(-2)}), 0};
        } else if constexpr (std::is_same_v<K, mop::LaguerreFirst>) {
          return {Poly({kind.alpha[j - 1], Rational(-1)}), 1};
        } else if constexpr (std::is_same_v<K, mop::LaguerreSecond>) {
          return {Poly({kind.alpha, Rational(-kind.c[j - 1])}), 1};
        } else {
          throw ValidationError("type I Wronskian signs need a Hermite or Laguerre family");
        }
      },
      family.kind());
}

// (N / x^s)' + (N / x^s)(L / x^t), over the common power x^{s+1} when t = 1
Laurent differentiate(const Laurent& b, const LogDerivative& w) {
  const Poly x = Poly::identity();
  if (w.shift == 0) {
    if (b.shift == 0) return {ratcore::derivative(b.numer) + b.numer * w.numer, 0};
    return {ratcore::derivative(b.numer) * x - Rational(b.shift) * b.numer + b.numer * w.numer * x, b.shift + 1};
  }
  return {ratcore::derivative(b.numer) * x - Rational(b.shift) * b.numer + b.numer * w.numer, b.shift + 1};
}

BigFloat eval(const Poly& p, const BigFloat& x, long bits) {
  BigFloat acc(bits);
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + BigFloat(c[k], bits);
  return acc;
}

// Gaussian elimination with partial pivoting; returns the determinant.
BigFloat determinant(std::vector<std::vector<BigFloat>> a, long bits) {
  const std::size_t n = a.size();
  BigFloat det(1.0, bits);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(a[pivot][col]) < abs(a[r][col])) pivot = r;
    if (a[pivot][col].sign() == 0) return BigFloat(bits);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const BigFloat f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] = a[r][k] - f * a[col][k];
    }
  }
  return det;
}

}  // namespace

Type1SignReport type1_wronskian_grid_sign(const mop::WeightFamily& family, const mop::PathSpec& path,
                                          const std::vector<Rational>& grid, long precision_bits) {
  const auto indices = mop::validate_path(path);
  const std::size_t l = indices.size();
  const std::size_t r = family.rank();
  if (indices.front().rank() != r) throw ValidationError("multi-index rank does not match the family");
  std::vector<LogDerivative> logd;
  for (std::size_t j = 1; j <= r; ++j) logd.push_back(log_derivative(family, j));
  for (const auto& x : grid)
    if (family.positive_support() && x <= 0) throw ValidationError("grid point " + ratcore::to_string(x) + " is outside the support");

  // terms[i][k][j] = B_{j,k} for the form Q_{n_i}
  std::vector<std::vector<std::vector<Laurent>>> terms(l);
  for (std::size_t i = 0; i < l; ++i) {
    const auto form = mop::construct_type1(family, indices[i]);
    std::vector<Laurent> current;
    for (const auto& a : form.coeff_polys) current.push_back({a, 0});
    for (std::size_t k = 0; k < l; ++k) {
      terms[i].push_back(current);
      for (std::size_t j = 0; j < r; ++j) current[j] = differentiate(current[j], logd[j]);
    }
  }

  Type1SignReport report;
  const long bits = precision_bits;
  for (const auto& x : grid) {
    const BigFloat xb(x, bits);
    std::vector<BigFloat> weights;
    for (std::size_t j = 1; j <= r; ++j) weights.push_back(mop::normalized_weight(family, j, xb));
    std::vector<std::vector<BigFloat>> m(l, std::vector<BigFloat>(l, BigFloat(bits)));
    for (std::size_t k = 0; k < l; ++k) {
      for (std::size_t i = 0; i < l; ++i) {
        BigFloat entry(bits);
        for (std::size_t j = 0; j < r; ++j) {
          const Laurent& b = terms[i][k][j];
          if (b.numer.is_zero()) continue;
          BigFloat v = eval(b.numer, xb, bits);
          for (unsigned s = 0; s < b.shift; ++s) v = v / xb;
          entry = entry + v * weights[j];
        }
        m[k][i] = entry;
      }
    }
    const BigFloat det = determinant(std::move(m), bits);
    report.samples.push_back({x, det.sign(), det.to_string(12)});
  }

  for (const auto& s : report.samples) {
    if (s.sign == 0) {
      report.constant_sign = false;
    } else if (report.sign == 0) {
      report.sign = s.sign;
    } else if (s.sign != report.sign) {
      report.constant_sign = false;
    }
  }
  return report;
}

std::vector<Rational> uniform_grid(const Rational& lo, const Rational& hi, std::size_t count) {
  if (count < 2 || !(lo < hi)) throw ValidationError("grid needs at least two points on a nonempty interval");
  std::vector<Rational> grid;
  for (std::size_t i = 0; i < count; ++i) grid.push_back(lo + (hi - lo) * Rational(i) / Rational(count - 1));
  return grid;
}

nlohmann::json to_json(const Type1SignReport& r) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.samples) samples.push_back({{"x", ratcore::to_string(s.x)}, {"sign", s.sign}, {"value", s.value}});
  return {{"heuristic", true}, {"constant_sign", r.constant_sign}, {"sign", r.sign}, {"samples", samples}};
}

}  // namespace mopw::analyze
