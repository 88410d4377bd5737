#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "mopw/ratcore/rational.hpp"
#include "mopw/wronsk/wronskian.hpp"

namespace mopw::wronsk {

using ratcore::Rational;

/// Outcome of an exact identity check. The witness describes the failing
/// instance and is null on success.
struct CheckResult {
  bool ok = true;
  nlohmann::json witness;
};

nlohmann::json to_json(const CheckResult& r);

/// W along the straight e_j path of length l against
/// (-2)^{l(l-1)/2} det [H_{n + (a+b) e_j}] for multiple Hermite.
CheckResult hankel_wronskian_identity_check(const MultiIndex& n, const std::vector<Rational>& c,
                                            std::size_t direction, std::size_t l);

/// det A * det A[m1,m2; n1,n2] = det A[m1;n1] det A[m2;n2] - det A[m1;n2] det A[m2;n1]
/// with one-based indices, m1 > m2 and n1 > n2. The 0 x 0 determinant is 1.
/// Throws ValidationError for indices outside that range.
CheckResult sylvester_check(const PolyMatrix& m, std::size_t m1, std::size_t m2, std::size_t n1, std::size_t n2);

/// Every monotone path of length l from n (capped, then sampled with the
/// seed) yields the same Wronskian. Needs l >= 2 and r >= 2.
CheckResult path_independence_check(const WeightFamily& family, const MultiIndex& n, std::size_t l,
                                    std::size_t cap = 50, std::uint64_t seed = 0);

struct MomentAcp {
  /// W(path; z) / (0! 1! ... (m-1)!)
  Poly poly;
  Rational value;
};

MomentAcp moment_acp(const WeightFamily& family, const PathSpec& path, const Rational& z);

struct ConfluentSample {
  Rational eps;
  /// det(P_{n_j}(z_i)) / prod_{i<j} (z_j - z_i) with z_i = z + i eps
  Rational divided;
  Rational residual;
};

struct ConfluentReport {
  Rational target;
  /// First-order coefficient of the residual, (m-1)/2 * d/dz of the target.
  Rational slope;
  std::vector<ConfluentSample> samples;
};

ConfluentReport confluent_check(const WeightFamily& family, const PathSpec& path, const Rational& z,
                                const std::vector<Rational>& eps);

/// |residual_i| / |residual_{i+1}| for consecutive samples; an exact zero
/// pair is reported as a ratio of 0.
std::vector<double> residual_ratios(const ConfluentReport& report);

/// True when every residual vanishes, or when every consecutive ratio lies
/// in (lo, hi). Where the slope is zero the residual is O(eps^2), and ratios
/// above lo are accepted.
bool decays_linearly(const ConfluentReport& report, double lo = 5.0, double hi = 20.0);

nlohmann::json to_json(const ConfluentReport& report);

}  // namespace mopw::wronsk
