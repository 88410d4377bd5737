#pragma once

#include <vector>

#include <json.hpp>

#include "mopw/mop/multi_index.hpp"
#include "mopw/mop/weight_family.hpp"
#include "mopw/ratcore/rational.hpp"

namespace mopw::analyze {

using ratcore::Rational;

struct GridSample {
  Rational x;
  int sign = 0;
  /// Decimal rendering of the determinant at the working precision.
  std::string value;
};

/// Heuristic: signs of a non-polynomial determinant sampled on a grid.
struct Type1SignReport {
  std::vector<GridSample> samples;
  /// No two nonzero samples disagree and none is zero.
  bool constant_sign = true;
  int sign = 0;
};

/// W(Q_{n_0}, ..., Q_{n_{l-1}}) at each grid point, where Q_n = sum_j A_{n,j} w_j
/// is the type I linear form against the unit-mass weights. Derivatives are
/// taken in closed form, Q^{(k)} = sum_j B_{j,k} w_j with B_{j,k} a Laurent
/// polynomial, and only the weights are evaluated in floating point.
/// Throws ValidationError for custom families and for grid points outside the
/// support.
Type1SignReport type1_wronskian_grid_sign(const mop::WeightFamily& family, const mop::PathSpec& path,
                                          const std::vector<Rational>& grid, long precision_bits = 256);

/// count points evenly spaced on [lo, hi].
std::vector<Rational> uniform_grid(const Rational& lo, const Rational& hi, std::size_t count);

nlohmann::json to_json(const Type1SignReport& r);

}  // namespace mopw::analyze
