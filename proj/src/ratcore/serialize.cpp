#include "mopw/ratcore/serialize.hpp"

#include "mopw/error.hpp"

namespace mopw::ratcore {

nlohmann::json poly_to_json(const Poly& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

nlohmann::json poly_report(const Poly& p) {
  return {{"poly", poly_to_json(p)}, {"degree", p.degree()}, {"leading", to_string(p.leading())}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ValidationError("rational must be a string such as \"3/5\" or an integer");
}

}  // namespace mopw::ratcore
