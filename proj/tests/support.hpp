#pragma once

#include <random>
#include <vector>

#include "mopw/ratcore/matrix.hpp"
#include "mopw/ratcore/poly.hpp"

namespace mopw::testing {

using ratcore::Poly;
using ratcore::Rational;

inline Rational q(long num, long den = 1) { return ratcore::make_rational(num, den); }

/// x^2 - 1/2 and friends are easier to read as coefficient lists.
inline Poly poly(std::initializer_list<Rational> c) { return Poly(c); }

inline Poly laguerre_turan_quintic() {
  return Poly({q(-10), q(185, 3), q(-7495, 72), q(647, 9), q(-119, 6), q(2)});
}

/// Small random rational with numerator in [-range, range] and denominator in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, int range = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  return q(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = random_rational(rng);
  return Poly(std::move(c));
}

/// Laplace expansion along the first row. Test oracle only.
template <class T>
T cofactor_determinant(const ratcore::Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T acc{};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t drop_row[] = {0};
    const std::size_t drop_col[] = {j};
    T term = m(0, j) * cofactor_determinant(m.without(drop_row, drop_col), one);
    if (j % 2 == 0) {
      acc = acc + term;
    } else {
      acc = acc - term;
    }
  }
  return acc;
}

}  // namespace mopw::testing
