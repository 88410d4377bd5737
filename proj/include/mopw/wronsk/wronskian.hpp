#pragma once

#include <cstddef>

#include "mopw/mop/construct.hpp"
#include "mopw/mop/multi_index.hpp"
#include "mopw/mop/weight_family.hpp"
#include "mopw/ratcore/matrix.hpp"
#include "mopw/ratcore/poly.hpp"

namespace mopw::wronsk {

using mop::MultiIndex;
using mop::PathSpec;
using mop::Type2Table;
using mop::WeightFamily;
using ratcore::Poly;
using ratcore::PolyMatrix;

/// l x l matrix with entry (i, j) = d^i/dx^i P_{n_j}.
PolyMatrix wronskian_matrix(Type2Table& table, const PathSpec& path);

/// W(n, l; x) along the path. Degree l|n|, leading coefficient
/// 1! 2! ... (l-1)!.
Poly wronskian(Type2Table& table, const PathSpec& path);
Poly wronskian(const WeightFamily& family, const PathSpec& path);

/// det [P_{n + (a+b) e_j}]_{a,b=0}^{l-1}, as it stands.
Poly hankel_determinant(Type2Table& table, const MultiIndex& n, std::size_t direction, std::size_t l);

/// The Turanian (-1)^{l(l-1)/2} det [P_{n + (a+b) e_j}], so that l = 2 gives
/// P_{n+e_j}^2 - P_n P_{n+2e_j}.
Poly turanian(Type2Table& table, const MultiIndex& n, std::size_t direction, std::size_t l);
Poly turanian(const WeightFamily& family, const MultiIndex& n, std::size_t direction, std::size_t l);

}  // namespace mopw::wronsk
