#include "mopw/wronsk/checks.hpp"

#include <cmath>

#include "mopw/error.hpp"
#include "mopw/ratcore/serialize.hpp"

namespace mopw::wronsk {

using ratcore::poly_to_json;

nlohmann::json to_json(const CheckResult& r) { return {{"ok", r.ok}, {"witness", r.witness}}; }

CheckResult hankel_wronskian_identity_check(const MultiIndex& n, const std::vector<Rational>& c,
                                            std::size_t direction, std::size_t l) {
  Type2Table table(WeightFamily::hermite(c));
  const Poly w = wronskian(table, mop::straight_path(n, l, direction));
  const Poly h = hankel_determinant(table, n, direction, l);
  const Poly rhs = ratcore::power(Rational(-2), static_cast<int>(l * (l - 1) / 2)) * h;
  if (w == rhs) return {};
  return {false,
          {{"n", n.to_string()}, {"direction", direction}, {"l", l}, {"wronskian", poly_to_json(w)},
           {"scaled_hankel", poly_to_json(rhs)}}};
}

CheckResult sylvester_check(const PolyMatrix& m, std::size_t m1, std::size_t m2, std::size_t n1, std::size_t n2) {
  const std::size_t size = m.rows();
  if (!m.is_square()) throw ValidationError("Sylvester check needs a square matrix");
  if (!(size >= m1 && m1 > m2 && m2 >= 1)) throw ValidationError("row indices must satisfy size >= m1 > m2 >= 1");
  if (!(size >= n1 && n1 > n2 && n2 >= 1)) throw ValidationError("column indices must satisfy size >= n1 > n2 >= 1");

  auto minor = [&](std::initializer_list<std::size_t> rows, std::initializer_list<std::size_t> cols) {
    std::vector<std::size_t> r, c;
    for (auto i : rows) r.push_back(i - 1);
    for (auto j : cols) c.push_back(j - 1);
    return ratcore::determinant(m.without(r, c));
  };
  const Poly lhs = ratcore::determinant(m) * minor({m1, m2}, {n1, n2});
  const Poly rhs = minor({m1}, {n1}) * minor({m2}, {n2}) - minor({m1}, {n2}) * minor({m2}, {n1});
  if (lhs == rhs) return {};
  return {false, {{"lhs", poly_to_json(lhs)}, {"rhs", poly_to_json(rhs)}}};
}

CheckResult path_independence_check(const WeightFamily& family, const MultiIndex& n, std::size_t l,
                                    std::size_t cap, std::uint64_t seed) {
  if (l < 2) throw ValidationError("path independence needs l >= 2");
  if (n.rank() < 2) throw ValidationError("path independence needs r >= 2");
  if (n.rank() != family.rank()) throw ValidationError("multi-index rank does not match the family");
  Type2Table table(family);
  const auto paths = mop::enumerate_paths(n, l, cap, seed);
  const Poly reference = wronskian(table, paths.front());
  for (std::size_t i = 1; i < paths.size(); ++i) {
    const Poly w = wronskian(table, paths[i]);
    if (w != reference) {
      return {false,
              {{"path_a", mop::path_to_json(paths.front())}, {"path_b", mop::path_to_json(paths[i])},
               {"wronskian_a", poly_to_json(reference)}, {"wronskian_b", poly_to_json(w)}}};
    }
  }
  return {};
}

namespace {

Rational superfactorial(std::size_t m) {
  Rational acc = 1;
  for (std::size_t i = 1; i < m; ++i) acc *= ratcore::factorial(static_cast<unsigned>(i));
  return acc;
}

}  // namespace

MomentAcp moment_acp(const WeightFamily& family, const PathSpec& path, const Rational& z) {
  Poly p = wronskian(family, path) / superfactorial(path.length());
  Rational value = ratcore::evaluate(p, z);
  return {std::move(p), std::move(value)};
}

ConfluentReport confluent_check(const WeightFamily& family, const PathSpec& path, const Rational& z,
                                const std::vector<Rational>& eps) {
  Type2Table table(family);
  const auto indices = mop::validate_path(path);
  const std::size_t m = indices.size();
  ConfluentReport report;
  const Poly w = wronskian(table, path);
  report.target = ratcore::evaluate(w, z) / superfactorial(m);
  report.slope = Rational(m - 1) / 2 * ratcore::evaluate(ratcore::derivative(w), z) / superfactorial(m);
  for (const auto& e : eps) {
    if (e <= 0) throw ValidationError("confluence step must be positive");
    ratcore::RationalMatrix values(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational zi = z + Rational(i) * e;
      for (std::size_t j = 0; j < m; ++j) values(i, j) = ratcore::evaluate(table(indices[j]), zi);
    }
    // prod_{i<j} (z_j - z_i) = eps^{m(m-1)/2} prod_{i<j} (j - i)
    Rational vandermonde = ratcore::power(e, static_cast<int>(m * (m - 1) / 2)) * superfactorial(m);
    const Rational divided = ratcore::determinant(values) / vandermonde;
    report.samples.push_back({e, divided, divided - report.target});
  }
  return report;
}

std::vector<double> residual_ratios(const ConfluentReport& report) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < report.samples.size(); ++i) {
    const Rational& a = report.samples[i].residual;
    const Rational& b = report.samples[i + 1].residual;
    if (b == 0) {
      out.push_back(a == 0 ? 0.0 : HUGE_VAL);
    } else {
      out.push_back(std::abs(Rational(a / b).get_d()));
    }
  }
  return out;
}

bool decays_linearly(const ConfluentReport& report, double lo, double hi) {
  bool all_zero = true;
  for (const auto& s : report.samples) all_zero = all_zero && s.residual == 0;
  if (all_zero) return true;
  for (double r : residual_ratios(report))
    if (!(r > lo && (r < hi || report.slope == 0))) return false;
  return true;
}

nlohmann::json to_json(const ConfluentReport& report) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"eps", ratcore::to_string(s.eps)},
                       {"divided", ratcore::to_string(s.divided)},
                       {"residual", ratcore::to_string(s.residual)},
                       {"residual_approx", s.residual.get_d()}});
  }
  return {{"target", ratcore::to_string(report.target)},
          {"slope", ratcore::to_string(report.slope)},
          {"samples", samples},
          {"ratios", residual_ratios(report)},
          {"ok", decays_linearly(report)}};
}

}  // namespace mopw::wronsk
