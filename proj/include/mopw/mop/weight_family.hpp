#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mopw/ratcore/bigfloat.hpp"
#include "mopw/ratcore/rational.hpp"

namespace mopw::mop {

using ratcore::Rational;

/// w_j(x) = exp(-x^2 + c_j x) on the real line.
struct Hermite {
  std::vector<Rational> c;
};

/// w_j(x) = x^{alpha_j} exp(-x) on (0, inf).
struct LaguerreFirst {
  std::vector<Rational> alpha;
};

/// w_j(x) = x^alpha exp(-c_j x) on (0, inf).
struct LaguerreSecond {
  Rational alpha;
  std::vector<Rational> c;
};

/// Weights known only through their moments. moment(j, k) is the k-th moment
/// of weight j (1-based); it is rescaled to unit mass on use.
struct CustomMoments {
  std::size_t rank = 1;
  std::function<Rational(std::size_t, unsigned)> moment;
};

class WeightFamily {
 public:
  using Kind = std::variant<Hermite, LaguerreFirst, LaguerreSecond, CustomMoments>;

  /// Builds and validates.
  explicit WeightFamily(Kind kind);
  /// Skips validation; for probing degenerate parameter choices.
  static WeightFamily unchecked(Kind kind);

  static WeightFamily hermite(std::vector<Rational> c) { return WeightFamily(Hermite{std::move(c)}); }
  static WeightFamily laguerre_first(std::vector<Rational> alpha) {
    return WeightFamily(LaguerreFirst{std::move(alpha)});
  }
  static WeightFamily laguerre_second(Rational alpha, std::vector<Rational> c) {
    return WeightFamily(LaguerreSecond{std::move(alpha), std::move(c)});
  }

  const Kind& kind() const { return kind_; }
  std::size_t rank() const;
  /// "hermite", "laguerre1", "laguerre2" or "custom".
  std::string name() const;
  /// True on (0, inf) supported families.
  bool positive_support() const;

  /// Throws ValidationError when the parameters break the defining
  /// constraints (distinct c's, alpha > -1, non-integer alpha differences,
  /// positive rates).
  void validate() const;

  /// Family after the parameter shift of the raising relation along a
  /// direction: alpha - e_j (first kind), alpha - 1 (second kind), unchanged
  /// for Hermite. The result is validated.
  WeightFamily lowered(std::size_t direction) const;

 private:
  struct NoCheck {};
  WeightFamily(Kind kind, NoCheck) : kind_(std::move(kind)) {}

  Kind kind_;
};

/// {"kind":"hermite","c":[...]}, {"kind":"laguerre1","alpha":[...]},
/// {"kind":"laguerre2","alpha":"..","c":[...]}, and a finite moment table
/// {"kind":"custom","moments":[[...], ...]}.
WeightFamily family_from_json(const nlohmann::json& j);
/// Custom families do not serialize.
nlohmann::json family_to_json(const WeightFamily& family);

/// Unit-mass weight w_j / \int w_j evaluated at x (inside the support) with
/// the given precision. Throws for custom families.
ratcore::BigFloat normalized_weight(const WeightFamily& family, std::size_t j, const ratcore::BigFloat& x);

}  // namespace mopw::mop
