#pragma once

#include <optional>

#include <json.hpp>

#include "mopw/ratcore/poly.hpp"
#include "mopw/ratcore/real_roots.hpp"

namespace mopw::analyze {

using ratcore::Poly;
using ratcore::Rational;
using ratcore::RationalInterval;

enum class Domain { RealLine, PositiveHalfLine };

/// "R" or "(0,inf)"
const char* to_string(Domain d);
Domain parse_domain(const std::string& text);

struct PositivityCertificate {
  Domain domain;
  int real_root_count_in_domain = 0;
  Rational sample_point;
  int sample_sign = 1;
  int leading_sign = 1;
};

/// A point of the domain where p <= 0. When p is nonnegative and only
/// touches zero at irrational points, no such rational point exists; the
/// witness is then an interval isolating one of those zeros and point is
/// its midpoint.
struct Refutation {
  Rational point;
  Rational value;
  std::optional<RationalInterval> zero_enclosure;
};

struct PositivityResult {
  Domain domain;
  std::optional<PositivityCertificate> certificate;
  std::optional<Refutation> refutation;
  /// Sign of p(0), reported for the half line, where 0 is not in the domain.
  int sign_at_zero = 0;

  bool certified() const { return certificate.has_value(); }
};

/// Exact Sturm count on the domain, then a sample sign. Throws
/// ValidationError for the zero polynomial.
PositivityResult certify_positive(const Poly& p, Domain domain);

nlohmann::json to_json(const PositivityResult& r);

}  // namespace mopw::analyze
