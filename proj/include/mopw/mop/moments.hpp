#pragma once

#include <cstddef>
#include <vector>

#include "mopw/mop/weight_family.hpp"

namespace mopw::mop {

/// nu_{j,0..k_max}: moments of weight j (1-based) divided by its mass.
///   Hermite:         nu_k = (c_j/2) nu_{k-1} + ((k-1)/2) nu_{k-2}
///   Laguerre first:  nu_k = (alpha_j + 1)_k
///   Laguerre second: nu_k = (alpha + 1)_k / c_j^k
std::vector<Rational> normalized_moments(const WeightFamily& family, std::size_t j, unsigned k_max);

/// Normalized moments of every weight, extended on demand.
class MomentTable {
 public:
  explicit MomentTable(WeightFamily family) : family_(std::move(family)), values_(family_.rank()) {}

  const WeightFamily& family() const { return family_; }
  /// nu_{j,k}; j is 1-based.
  const Rational& operator()(std::size_t j, unsigned k);

 private:
  WeightFamily family_;
  std::vector<std::vector<Rational>> values_;
};

}  // namespace mopw::mop
