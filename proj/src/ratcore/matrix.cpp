#include "mopw/ratcore/matrix.hpp"

namespace mopw::ratcore {

namespace {

bool is_zero(const Poly& p) { return p.is_zero(); }
bool is_zero(const Rational& q) { return q == 0; }
bool is_zero(const Integer& z) { return z == 0; }

Rational divide_exact(const Rational& a, const Rational& b) { return a / b; }
Poly divide_exact(const Poly& a, const Poly& b) { return exact_quotient(a, b); }
Integer divide_exact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// In-place Bareiss forward elimination on the leading n columns of an n x m
// array (m >= n). Returns the permutation sign, or 0 when singular.
template <class T>
int bareiss_eliminate(std::vector<T>& a, std::size_t n, std::size_t m, const T& one) {
  int sign = 1;
  T prev = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(a[pivot * m + k])) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a[k * m + j], a[pivot * m + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        T t = a[i * m + j] * a[k * m + k] - a[i * m + k] * a[k * m + j];
        a[i * m + j] = divide_exact(t, prev);
      }
      a[i * m + k] = T{};
    }
    prev = a[k * m + k];
  }
  return sign;
}

template <class T>
T bareiss_determinant(const Matrix<T>& mat, const T& one) {
  if (!mat.is_square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = mat.rows();
  if (n == 0) return one;
  std::vector<T> a(mat.entries().begin(), mat.entries().end());
  const int sign = bareiss_eliminate(a, n, n, one);
  if (sign == 0) return T{};
  T det = a[n * n - 1];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace

Poly determinant(const PolyMatrix& m) { return bareiss_determinant(m, Poly::constant(1)); }

Rational determinant(const RationalMatrix& m) { return bareiss_determinant(m, Rational(1)); }

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a, std::span<const Rational> b) {
  if (!a.is_square() || b.size() != a.rows()) throw ValidationError("linear system shape mismatch");
  const std::size_t n = a.rows();
  const std::size_t m = n + 1;
  std::vector<Integer> aug(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = b[i].get_den();
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) aug[i * m + j] = Integer(a(i, j).get_num() * (l / a(i, j).get_den()));
    aug[i * m + n] = Integer(b[i].get_num() * (l / b[i].get_den()));
  }
  if (bareiss_eliminate(aug, n, m, Integer(1)) == 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = aug[i * m + n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(aug[i * m + j]) * x[j];
    x[i] = acc / Rational(aug[i * m + i]);
  }
  return x;
}

}  // namespace mopw::ratcore
