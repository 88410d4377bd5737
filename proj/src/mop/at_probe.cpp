#include "mopw/mop/at_probe.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "mopw/error.hpp"

namespace mopw::mop {

using ratcore::BigFloat;

namespace {

// Partial-pivoting elimination; returns |det|.
BigFloat abs_determinant(std::vector<std::vector<BigFloat>> a, mpfr_prec_t bits) {
  const std::size_t n = a.size();
  BigFloat det(1.0, bits);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(a[pivot][k]) < abs(a[i][k])) pivot = i;
    if (a[pivot][k].sign() == 0) return BigFloat(bits);
    std::swap(a[k], a[pivot]);
    det = det * a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigFloat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  return abs(det);
}

}  // namespace

AtProbeReport at_system_probe(const WeightFamily& family, const MultiIndex& n, unsigned trials, std::uint64_t seed,
                              long precision_bits) {
  if (trials < 1) throw ValidationError("at least one trial is needed");
  if (n.rank() != family.rank()) throw ValidationError("multi-index rank does not match the family");
  const auto bits = static_cast<mpfr_prec_t>(precision_bits);
  const unsigned size = n.total();
  // grid of eighths: [-3, 3] on the line, (0, 6] on the half line
  const int lo = family.positive_support() ? 1 : -24;
  const int hi = 24 + (family.positive_support() ? 24 : 0);
  if (static_cast<int>(size) > hi - lo + 1) throw ValidationError("multi-index too large for the probe grid");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(lo, hi);

  AtProbeReport report;
  report.min_relative_det = std::numeric_limits<double>::infinity();
  for (unsigned t = 0; t < trials; ++t) {
    std::set<int> picks;
    while (picks.size() < size) picks.insert(draw(rng));
    AtProbeTrial trial;
    for (int p : picks) trial.points.push_back(ratcore::make_rational(p, 8));

    std::vector<std::vector<BigFloat>> m;
    BigFloat norms(1.0, bits);
    for (std::size_t j = 1; j <= n.rank(); ++j) {
      for (unsigned s = 0; s < n.at(j); ++s) {
        std::vector<BigFloat> row;
        BigFloat sq(bits);
        for (const auto& x : trial.points) {
          const BigFloat xf(x, bits);
          BigFloat v = normalized_weight(family, j, xf);
          for (unsigned e = 0; e < s; ++e) v = v * xf;
          sq = sq + v * v;
          row.push_back(std::move(v));
        }
        norms = norms * sqrt(sq);
        m.push_back(std::move(row));
      }
    }
    const BigFloat det = size == 0 ? BigFloat(1.0, bits) : abs_determinant(std::move(m), bits);
    trial.abs_det = det.to_double();
    trial.relative_det = (det / norms).to_double();
    report.min_relative_det = std::min(report.min_relative_det, trial.relative_det);
    report.trials.push_back(std::move(trial));
  }
  report.flagged = report.min_relative_det < report.threshold;
  return report;
}

nlohmann::json to_json(const AtProbeReport& report) {
  auto trials = nlohmann::json::array();
  for (const auto& t : report.trials) {
    auto pts = nlohmann::json::array();
    for (const auto& p : t.points) pts.push_back(ratcore::to_string(p));
    trials.push_back({{"points", pts}, {"abs_det", t.abs_det}, {"relative_det", t.relative_det}});
  }
  return {{"min_relative_det", report.min_relative_det},
          {"threshold", report.threshold},
          {"flagged", report.flagged},
          {"trials", trials}};
}

}  // namespace mopw::mop
