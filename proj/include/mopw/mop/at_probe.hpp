#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "mopw/mop/multi_index.hpp"
#include "mopw/mop/weight_family.hpp"

namespace mopw::mop {

struct AtProbeTrial {
  std::vector<Rational> points;
  /// |det| of the Chebyshev matrix x_i^s w_j(x_i).
  double abs_det = 0.0;
  /// |det| divided by the product of the row norms (Hadamard ratio, in [0, 1]).
  double relative_det = 0.0;
};

struct AtProbeReport {
  std::vector<AtProbeTrial> trials;
  double min_relative_det = 0.0;
  /// Threshold on relative_det below which a trial is flagged.
  double threshold = 1e-12;
  /// True when some trial fell below the threshold: a probable violation of
  /// the Chebyshev property (diagnostic only, never a proof).
  bool flagged = false;
};

/// Evaluates the Chebyshev determinant of {x^s w_j : s < n_j} at |n| distinct
/// random rational points of the support, trials times, with MPFR precision.
/// Parameters are taken as given; no validation is applied.
AtProbeReport at_system_probe(const WeightFamily& family, const MultiIndex& n, unsigned trials, std::uint64_t seed,
                              long precision_bits = 256);

nlohmann::json to_json(const AtProbeReport& report);

}  // namespace mopw::mop
