#pragma once

#include <vector>

#include "mopw/ratcore/poly.hpp"
#include "mopw/ratcore/real_roots.hpp"
#include "mopw/wronsk/checks.hpp"

namespace mopw::analyze {

using ratcore::Poly;
using ratcore::Rational;
using ratcore::RationalInterval;

struct ZeroProfile {
  /// Distinct real roots.
  int count = 0;
  /// gcd(p, p') is constant.
  bool simple = true;
  std::vector<RationalInterval> intervals;
};

/// 2^-20
Rational default_interval_width();

ZeroProfile real_zero_profile(const Poly& p, const Rational& max_width = default_interval_width());

nlohmann::json to_json(const ZeroProfile& z);

/// Strict interlacing of the real zeros of p and q: both have simple zeros,
/// no zero is shared, the counts differ by exactly one and, once the
/// isolating intervals are refined apart, ownership alternates.
wronsk::CheckResult interlacing_check(const Poly& p, const Poly& q);

}  // namespace mopw::analyze
