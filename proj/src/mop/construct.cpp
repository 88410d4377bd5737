#include "mopw/mop/construct.hpp"

#include "mopw/error.hpp"
#include "mopw/mop/moments.hpp"
#include "mopw/ratcore/matrix.hpp"

namespace mopw::mop {

using ratcore::RationalMatrix;

namespace {

// Calls visit(k) for every k with 0 <= k_i <= n_i.
template <class F>
void for_each_subindex(const MultiIndex& n, F&& visit) {
  std::vector<unsigned> k(n.rank(), 0);
  while (true) {
    visit(std::as_const(k));
    std::size_t i = 0;
    while (i < k.size() && k[i] == n.entries()[i]) k[i++] = 0;
    if (i == k.size()) return;
    ++k[i];
  }
}

void require_rank(const MultiIndex& n, std::size_t rank) {
  if (n.rank() != rank) {
    throw ValidationError("multi-index " + n.to_string() + " has rank " + std::to_string(n.rank()) +
                          " but the family has " + std::to_string(rank) + " weights");
  }
}

}  // namespace

Poly construct_type2(const WeightFamily& family, const MultiIndex& n) {
  require_rank(n, family.rank());
  const unsigned size = n.total();
  if (size == 0) return Poly::constant(1);
  MomentTable nu(family);
  RationalMatrix a(size, size);
  std::vector<Rational> b(size);
  std::size_t row = 0;
  for (std::size_t j = 1; j <= n.rank(); ++j) {
    for (unsigned s = 0; s < n.at(j); ++s, ++row) {
      for (unsigned i = 0; i < size; ++i) a(row, i) = nu(j, i + s);
      b[row] = -nu(j, size + s);
    }
  }
  const auto solution = ratcore::solve_linear(a, b);
  if (!solution) throw SingularSystemError("index " + n.to_string() + " not normal for this family/parameters");
  std::vector<Rational> coeffs = *solution;
  coeffs.push_back(1);
  return Poly(std::move(coeffs));
}

Poly classical_hermite(unsigned m) {
  Poly prev = Poly::constant(1);
  if (m == 0) return prev;
  Poly cur = Poly::monomial(2, 1);
  for (unsigned k = 1; k < m; ++k) {
    Poly next = Poly::monomial(2, 1) * cur - prev * Rational(2 * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly hermite_closed_form(const MultiIndex& n, const std::vector<Rational>& c) {
  require_rank(n, c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] == c[j]) throw ValidationError("hermite c entries must be pairwise distinct");
  const unsigned size = n.total();
  std::vector<Poly> hermite(size + 1);
  for (unsigned m = 0; m <= size; ++m) hermite[m] = classical_hermite(m);

  Poly sum;
  for_each_subindex(n, [&](const std::vector<unsigned>& k) {
    Rational coeff = 1;
    unsigned k_total = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      coeff *= ratcore::binomial(n.entries()[j], k[j]) * ratcore::power(c[j], static_cast<int>(n.entries()[j] - k[j]));
      k_total += k[j];
    }
    if (k_total % 2 == 1) coeff = -coeff;
    sum += hermite[k_total] * coeff;
  });
  Rational prefactor = ratcore::power(ratcore::make_rational(1, 2), static_cast<int>(size));
  if (size % 2 == 1) prefactor = -prefactor;
  return sum * prefactor;
}

Poly laguerre1_closed_form(const MultiIndex& n, const std::vector<Rational>& alpha) {
  require_rank(n, alpha.size());
  WeightFamily::laguerre_first(alpha);  // validates
  const unsigned size = n.total();
  const std::size_t r = n.rank();
  // suffix sums n_j + ... + n_r
  std::vector<unsigned> tail(r + 1, 0);
  for (std::size_t j = r; j-- > 0;) tail[j] = tail[j + 1] + n.entries()[j];

  std::vector<Rational> coeffs(size + 1);
  for_each_subindex(n, [&](const std::vector<unsigned>& k) {
    Rational term = 1;
    unsigned k_total = 0;
    unsigned k_after = 0;  // k_{j+1} + ... + k_r
    for (std::size_t j = r; j-- > 0;) {
      term *= ratcore::binomial(n.entries()[j], k[j]) * ratcore::factorial(k[j]);
      term *= ratcore::binomial(Rational(tail[j] + alpha[j] - k_after), k[j]);
      k_after += k[j];
    }
    k_total = k_after;
    if (k_total % 2 == 1) term = -term;
    coeffs[size - k_total] += term;
  });
  return Poly(std::move(coeffs));
}

Poly laguerre2_closed_form(const MultiIndex& n, const Rational& alpha, const std::vector<Rational>& c) {
  require_rank(n, c.size());
  WeightFamily::laguerre_second(alpha, c);  // validates
  const unsigned size = n.total();
  std::vector<Rational> coeffs(size + 1);
  for_each_subindex(n, [&](const std::vector<unsigned>& k) {
    Rational term = 1;
    unsigned k_total = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      term *= ratcore::binomial(n.entries()[j], k[j]) / ratcore::power(c[j], static_cast<int>(k[j]));
      k_total += k[j];
    }
    term *= ratcore::binomial(Rational(size + alpha), k_total) * ratcore::factorial(k_total);
    if (k_total % 2 == 1) term = -term;
    coeffs[size - k_total] += term;
  });
  return Poly(std::move(coeffs));
}

Poly type2(const WeightFamily& family, const MultiIndex& n, Method method) {
  if (method == Method::Moments) return construct_type2(family, n);
  const auto& kind = family.kind();
  if (const auto* h = std::get_if<Hermite>(&kind)) return hermite_closed_form(n, h->c);
  if (const auto* l1 = std::get_if<LaguerreFirst>(&kind)) return laguerre1_closed_form(n, l1->alpha);
  if (const auto* l2 = std::get_if<LaguerreSecond>(&kind)) return laguerre2_closed_form(n, l2->alpha, l2->c);
  return construct_type2(family, n);
}

const Poly& Type2Table::operator()(const MultiIndex& n) {
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, type2(family_, n, method_)).first;
  return it->second;
}

LinearForm construct_type1(const WeightFamily& family, const MultiIndex& n) {
  require_rank(n, family.rank());
  const unsigned size = n.total();
  if (size == 0) throw ValidationError("type I forms need |n| >= 1");
  MomentTable nu(family);
  RationalMatrix a(size, size);
  std::vector<Rational> b(size);
  b[size - 1] = 1;
  for (unsigned k = 0; k < size; ++k) {
    std::size_t col = 0;
    for (std::size_t j = 1; j <= n.rank(); ++j)
      for (unsigned i = 0; i < n.at(j); ++i, ++col) a(k, col) = nu(j, i + k);
  }
  const auto solution = ratcore::solve_linear(a, b);
  if (!solution) throw SingularSystemError("index " + n.to_string() + " not normal for this family/parameters");
  LinearForm form{family, n, {}};
  std::size_t col = 0;
  for (std::size_t j = 1; j <= n.rank(); ++j) {
    std::vector<Rational> c(solution->begin() + static_cast<std::ptrdiff_t>(col),
                            solution->begin() + static_cast<std::ptrdiff_t>(col + n.at(j)));
    col += n.at(j);
    form.coeff_polys.emplace_back(std::move(c));
  }
  return form;
}

Poly raising_apply(const WeightFamily& family, const MultiIndex& n, std::size_t direction) {
  require_rank(n, family.rank());
  if (direction < 1 || direction > family.rank()) throw ValidationError("direction out of range");
  const auto& kind = family.kind();
  const Poly x = Poly::identity();
  if (const auto* h = std::get_if<Hermite>(&kind)) {
    const Poly p = hermite_closed_form(n, h->c);
    const Poly factor({Rational(-h->c[direction - 1]), 2});
    return (factor * p - ratcore::derivative(p)) / 2;
  }
  if (const auto* l1 = std::get_if<LaguerreFirst>(&kind)) {
    const Rational& a = l1->alpha[direction - 1];
    if (a <= 0) throw ValidationError("raising along a direction needs alpha_j > 0");
    const Poly p = laguerre1_closed_form(n, l1->alpha);
    return Poly({Rational(-a), 1}) * p - x * ratcore::derivative(p);
  }
  if (const auto* l2 = std::get_if<LaguerreSecond>(&kind)) {
    if (l2->alpha <= 0) throw ValidationError("raising needs alpha > 0");
    const Rational& c = l2->c[direction - 1];
    const Poly p = laguerre2_closed_form(n, l2->alpha, l2->c);
    return (Poly({Rational(-l2->alpha), c}) * p - x * ratcore::derivative(p)) / c;
  }
  throw ValidationError("raising relation is only known for hermite, laguerre1 and laguerre2");
}

}  // namespace mopw::mop
