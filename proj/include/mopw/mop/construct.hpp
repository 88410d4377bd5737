#pragma once

#include <map>
#include <vector>

#include "mopw/mop/multi_index.hpp"
#include "mopw/mop/weight_family.hpp"
#include "mopw/ratcore/poly.hpp"

namespace mopw::mop {

using ratcore::Poly;

/// Type II multiple orthogonal polynomial from the moment conditions
///   sum_k p_k nu_{j,k+s} = 0,  s < n_j,  j = 1..r,
/// with P monic of degree |n|. Throws SingularSystemError when the index is
/// not normal for the family.
Poly construct_type2(const WeightFamily& family, const MultiIndex& n);

/// Explicit double sum over k <= n with classical Hermite H_{|k|}
/// (leading coefficient 2^{|k|}); monic of degree |n|.
Poly hermite_closed_form(const MultiIndex& n, const std::vector<Rational>& c);

/// Explicit multiple sum for the first kind; monic of degree |n|.
Poly laguerre1_closed_form(const MultiIndex& n, const std::vector<Rational>& alpha);

/// Explicit multiple sum for the second kind; monic of degree |n|.
Poly laguerre2_closed_form(const MultiIndex& n, const Rational& alpha, const std::vector<Rational>& c);

/// Physicists' Hermite polynomial H_m, leading coefficient 2^m.
Poly classical_hermite(unsigned m);

enum class Method { Moments, ClosedForm };

/// P_n by the requested route. Custom families always use the moment
/// system.
Poly type2(const WeightFamily& family, const MultiIndex& n, Method method = Method::ClosedForm);

/// Memoizes P_n for one family within a single computation.
class Type2Table {
 public:
  explicit Type2Table(WeightFamily family, Method method = Method::ClosedForm)
      : family_(std::move(family)), method_(method) {}

  const WeightFamily& family() const { return family_; }
  const Poly& operator()(const MultiIndex& n);

 private:
  WeightFamily family_;
  Method method_;
  std::map<MultiIndex, Poly> cache_;
};

/// Type I linear form Q_n = sum_j A_{n,j} w_j against the unit-mass weights.
/// The function Q_n is the same as with raw weights; only each A_{n,j} absorbs
/// the mass of w_j.
struct LinearForm {
  WeightFamily family;
  MultiIndex index;
  /// coeff_polys[j-1] = A_{n,j}, of degree <= n_j - 1.
  std::vector<Poly> coeff_polys;
};

/// Solves \int Q_n x^k = 0 for k <= |n|-2 and \int Q_n x^{|n|-1} = 1.
/// Throws SingularSystemError when the index is not normal.
LinearForm construct_type1(const WeightFamily& family, const MultiIndex& n);

/// P_{n+e_j} at the lowered parameters, obtained from P_n via the raising
/// relation:
///   Hermite:         ((2x - c_j) H - H') / 2
///   Laguerre first:  (x - alpha_j) L - x L'        (needs alpha_j > 0)
///   Laguerre second: ((c_j x - alpha) L - x L') / c_j  (needs alpha > 0)
Poly raising_apply(const WeightFamily& family, const MultiIndex& n, std::size_t direction);

}  // namespace mopw::mop
