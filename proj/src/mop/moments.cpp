#include "mopw/mop/moments.hpp"

#include "mopw/error.hpp"

namespace mopw::mop {

std::vector<Rational> normalized_moments(const WeightFamily& family, std::size_t j, unsigned k_max) {
  if (j < 1 || j > family.rank()) throw ValidationError("weight index out of range");
  std::vector<Rational> nu(k_max + 1);
  const auto& kind = family.kind();
  if (const auto* h = std::get_if<Hermite>(&kind)) {
    const Rational mean = h->c[j - 1] / 2;
    nu[0] = 1;
    if (k_max >= 1) nu[1] = mean;
    for (unsigned k = 2; k <= k_max; ++k) nu[k] = mean * nu[k - 1] + Rational(k - 1) / 2 * nu[k - 2];
  } else if (const auto* l1 = std::get_if<LaguerreFirst>(&kind)) {
    nu[0] = 1;
    for (unsigned k = 1; k <= k_max; ++k) nu[k] = nu[k - 1] * (l1->alpha[j - 1] + k);
  } else if (const auto* l2 = std::get_if<LaguerreSecond>(&kind)) {
    nu[0] = 1;
    for (unsigned k = 1; k <= k_max; ++k) nu[k] = nu[k - 1] * (l2->alpha + k) / l2->c[j - 1];
  } else {
    const auto& custom = std::get<CustomMoments>(kind);
    const Rational mass = custom.moment(j, 0);
    if (mass == 0) throw ValidationError("custom weight with zero mass");
    for (unsigned k = 0; k <= k_max; ++k) nu[k] = custom.moment(j, k) / mass;
  }
  return nu;
}

const Rational& MomentTable::operator()(std::size_t j, unsigned k) {
  if (j < 1 || j > values_.size()) throw ValidationError("weight index out of range");
  auto& row = values_[j - 1];
  if (k >= row.size()) row = normalized_moments(family_, j, std::max<unsigned>(k, 2 * static_cast<unsigned>(row.size())));
  return row[k];
}

}  // namespace mopw::mop
