#include "mopw/mop/weight_family.hpp"

#include "mopw/error.hpp"
#include "mopw/ratcore/serialize.hpp"

namespace mopw::mop {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require_distinct(const std::vector<Rational>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) throw ValidationError(std::string(what) + " entries must be pairwise distinct");
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw ValidationError(std::string("family needs an array '") + key + "'");
  std::vector<Rational> out;
  for (const auto& v : j.at(key)) out.push_back(ratcore::rational_from_json(v));
  return out;
}

}  // namespace

WeightFamily::WeightFamily(Kind kind) : kind_(std::move(kind)) { validate(); }

WeightFamily WeightFamily::unchecked(Kind kind) { return WeightFamily(std::move(kind), NoCheck{}); }

std::size_t WeightFamily::rank() const {
  return std::visit(Overloaded{[](const Hermite& h) { return h.c.size(); },
                               [](const LaguerreFirst& l) { return l.alpha.size(); },
                               [](const LaguerreSecond& l) { return l.c.size(); },
                               [](const CustomMoments& m) { return m.rank; }},
                    kind_);
}

std::string WeightFamily::name() const {
  return std::visit(Overloaded{[](const Hermite&) { return std::string("hermite"); },
                               [](const LaguerreFirst&) { return std::string("laguerre1"); },
                               [](const LaguerreSecond&) { return std::string("laguerre2"); },
                               [](const CustomMoments&) { return std::string("custom"); }},
                    kind_);
}

bool WeightFamily::positive_support() const {
  return std::holds_alternative<LaguerreFirst>(kind_) || std::holds_alternative<LaguerreSecond>(kind_);
}

void WeightFamily::validate() const {
  if (rank() < 1) throw ValidationError("a weight family needs at least one weight");
  std::visit(Overloaded{[](const Hermite& h) { require_distinct(h.c, "hermite c"); },
                        [](const LaguerreFirst& l) {
                          for (const auto& a : l.alpha)
                            if (a <= -1) throw ValidationError("laguerre1 needs every alpha_j > -1");
                          for (std::size_t i = 0; i < l.alpha.size(); ++i)
                            for (std::size_t j = i + 1; j < l.alpha.size(); ++j) {
                              const Rational d = l.alpha[i] - l.alpha[j];
                              if (d.get_den() == 1) {
                                throw ValidationError("laguerre1 needs alpha_i - alpha_j outside the integers");
                              }
                            }
                        },
                        [](const LaguerreSecond& l) {
                          if (l.alpha <= -1) throw ValidationError("laguerre2 needs alpha > -1");
                          for (const auto& c : l.c)
                            if (c <= 0) throw ValidationError("laguerre2 needs every c_j > 0");
                          require_distinct(l.c, "laguerre2 c");
                        },
                        [](const CustomMoments& m) {
                          if (!m.moment) throw ValidationError("custom family needs a moment oracle");
                        }},
             kind_);
}

WeightFamily WeightFamily::lowered(std::size_t direction) const {
  if (direction < 1 || direction > rank()) throw ValidationError("direction out of range");
  return std::visit(Overloaded{[&](const Hermite& h) { return WeightFamily(h); },
                               [&](const LaguerreFirst& l) {
                                 auto a = l.alpha;
                                 a[direction - 1] -= 1;
                                 return WeightFamily(LaguerreFirst{std::move(a)});
                               },
                               [&](const LaguerreSecond& l) {
                                 return WeightFamily(LaguerreSecond{Rational(l.alpha - 1), l.c});
                               },
                               [&](const CustomMoments&) -> WeightFamily {
                                 throw ValidationError("custom families have no raising relation");
                               }},
                    kind_);
}

WeightFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ValidationError("family JSON needs a string 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "hermite") return WeightFamily::hermite(rationals_from_json(j, "c"));
  if (kind == "laguerre1") return WeightFamily::laguerre_first(rationals_from_json(j, "alpha"));
  if (kind == "laguerre2") {
    if (!j.contains("alpha")) throw ValidationError("laguerre2 needs 'alpha'");
    return WeightFamily::laguerre_second(ratcore::rational_from_json(j.at("alpha")), rationals_from_json(j, "c"));
  }
  if (kind == "custom") {
    if (!j.contains("moments") || !j.at("moments").is_array()) throw ValidationError("custom needs 'moments'");
    std::vector<std::vector<Rational>> table;
    for (const auto& row : j.at("moments")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(ratcore::rational_from_json(v));
      table.push_back(std::move(r));
    }
    const std::size_t rank = table.size();
    auto oracle = [table = std::move(table)](std::size_t w, unsigned k) -> Rational {
      const auto& row = table.at(w - 1);
      if (k >= row.size()) {
        throw ValidationError("custom moment table too short: weight " + std::to_string(w) + " needs moment " +
                              std::to_string(k));
      }
      return row[k];
    };
    return WeightFamily(CustomMoments{rank, std::move(oracle)});
  }
  throw ValidationError("unknown family kind '" + kind + "'");
}

nlohmann::json family_to_json(const WeightFamily& family) {
  auto strings = [](const std::vector<Rational>& v) {
    auto out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(ratcore::to_string(x));
    return out;
  };
  return std::visit(
      Overloaded{[&](const Hermite& h) -> nlohmann::json { return {{"kind", "hermite"}, {"c", strings(h.c)}}; },
                 [&](const LaguerreFirst& l) -> nlohmann::json {
                   return {{"kind", "laguerre1"}, {"alpha", strings(l.alpha)}};
                 },
                 [&](const LaguerreSecond& l) -> nlohmann::json {
                   return {{"kind", "laguerre2"}, {"alpha", ratcore::to_string(l.alpha)}, {"c", strings(l.c)}};
                 },
                 [&](const CustomMoments&) -> nlohmann::json {
                   throw ValidationError("custom families do not serialize");
                 }},
      family.kind());
}

ratcore::BigFloat normalized_weight(const WeightFamily& family, std::size_t j, const ratcore::BigFloat& x) {
  using ratcore::BigFloat;
  if (j < 1 || j > family.rank()) throw ValidationError("weight index out of range");
  const auto bits = x.precision();
  return std::visit(
      Overloaded{[&](const Hermite& h) {
                   // exp(-x^2 + c x) / (sqrt(pi) exp(c^2/4)) = exp(-(x - c/2)^2) / sqrt(pi)
                   const BigFloat shifted = x - BigFloat(Rational(h.c[j - 1] / 2), bits);
                   return exp(-(shifted * shifted)) / sqrt(BigFloat::pi(bits));
                 },
                 [&](const LaguerreFirst& l) {
                   if (x.sign() <= 0) throw ValidationError("laguerre weights live on x > 0");
                   const BigFloat a(l.alpha[j - 1], bits);
                   return pow(x, a) * exp(-x) / gamma(a + BigFloat(1.0, bits));
                 },
                 [&](const LaguerreSecond& l) {
                   if (x.sign() <= 0) throw ValidationError("laguerre weights live on x > 0");
                   const BigFloat a(l.alpha, bits);
                   const BigFloat c(l.c[j - 1], bits);
                   const BigFloat a1 = a + BigFloat(1.0, bits);
                   return pow(x, a) * exp(-(c * x)) * pow(c, a1) / gamma(a1);
                 },
                 [&](const CustomMoments&) -> BigFloat {
                   throw ValidationError("custom families have no pointwise weight");
                 }},
      family.kind());
}

}  // namespace mopw::mop
