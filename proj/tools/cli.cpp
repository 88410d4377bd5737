#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <sstream>

#include "mopw/analyze/complex_roots.hpp"
#include "mopw/analyze/positivity.hpp"
#include "mopw/analyze/real_zeros.hpp"
#include "mopw/analyze/type1_sign.hpp"
#include "mopw/error.hpp"
#include "mopw/mop/at_probe.hpp"
#include "mopw/mop/construct.hpp"
#include "mopw/ratcore/serialize.hpp"
#include "mopw/wronsk/checks.hpp"
#include "mopw/wronsk/turan.hpp"
#include "mopw/wronsk/wronskian.hpp"

namespace mopw::cli {

namespace {

using json = nlohmann::json;
using mop::MultiIndex;
using mop::PathSpec;
using mop::WeightFamily;
using ratcore::Poly;
using ratcore::Rational;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

unsigned long parse_count(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-')
    throw ValidationError("--" + name + " expects a non-negative integer, got '" + text + "'");
  return v;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(ratcore::parse_rational(part));
  return out;
}

// Option values as given on the command line, completed from --config.
class Settings {
 public:
  bool has(const std::string& name) const { return values_.count(name) > 0; }
  const std::string& get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw ValidationError("missing --" + name);
    return it->second;
  }
  std::string get_or(const std::string& name, const std::string& fallback) const {
    return has(name) ? get(name) : fallback;
  }
  unsigned long count(const std::string& name, unsigned long fallback) const {
    return has(name) ? parse_count(name, get(name)) : fallback;
  }
  bool flag(const std::string& name) const { return has(name) && get(name) != "false"; }
  void set(const std::string& name, std::string value) { values_[name] = std::move(value); }
  void set_default(const std::string& name, std::string value) { values_.emplace(name, std::move(value)); }

 private:
  std::map<std::string, std::string> values_;
};

std::string setting_from_json(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
    std::string joined;
    for (const auto& e : v) joined += (joined.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
    return joined;
  }
  return v.dump();
}

// A subcommand with its string options and boolean flags.
struct Command {
  CLI::App* app;
  std::map<std::string, std::string> raw;
  std::map<std::string, bool> flags;
  std::string config_path;

  Command(CLI::App& parent, const std::string& name, const std::string& description)
      : app(parent.add_subcommand(name, description)) {
    app->add_option("--config", config_path, "JSON file with option values; flags win");
  }

  Command& option(const std::string& name, const std::string& description) {
    app->add_option("--" + name, raw[name], description);
    return *this;
  }
  Command& flag(const std::string& name, const std::string& description) {
    app->add_flag("--" + name, flags[name], description);
    return *this;
  }

  Settings settings() const {
    Settings s;
    for (const auto& [name, value] : raw)
      if (app->count("--" + name) > 0) s.set(name, value);
    for (const auto& [name, value] : flags)
      if (value) s.set(name, "true");
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ValidationError("cannot read config file " + config_path);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw ValidationError("config file is not valid JSON: " + std::string(e.what()));
      }
      if (!doc.is_object()) throw ValidationError("config file must hold a JSON object");
      for (const auto& [key, value] : doc.items()) {
        if (!raw.count(key) && !flags.count(key)) throw ValidationError("unknown config key '" + key + "'");
        s.set_default(key, setting_from_json(value));
      }
    }
    if (const char* env = std::getenv("MOPW_SEED"); env && raw.count("seed")) s.set("seed", env);
    return s;
  }
};

void add_family_options(Command& c) {
  c.option("family", "family JSON, or hermite | laguerre1 | laguerre2 with --c / --alpha")
      .option("c", "comma-separated rationals c_1..c_r")
      .option("alpha", "comma-separated alpha_1..alpha_r (a single alpha for laguerre2)");
}

WeightFamily family_of(const Settings& s) {
  json doc = json::object();
  if (s.has("family")) {
    const std::string& text = s.get("family");
    if (!text.empty() && text.front() == '{') {
      try {
        doc = json::parse(text);
      } catch (const json::exception& e) {
        throw ValidationError("--family is not valid JSON: " + std::string(e.what()));
      }
    } else {
      doc["kind"] = text;
    }
  } else if (s.has("c") && s.has("alpha")) {
    doc["kind"] = "laguerre2";
  } else if (s.has("alpha")) {
    doc["kind"] = "laguerre1";
  } else if (s.has("c")) {
    doc["kind"] = "hermite";
  } else {
    throw ValidationError("missing --family");
  }
  auto as_json = [](const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(ratcore::to_string(x));
    return a;
  };
  if (s.has("c")) doc["c"] = as_json(parse_rationals(s.get("c")));
  if (s.has("alpha")) {
    const auto alpha = parse_rationals(s.get("alpha"));
    if (doc.value("kind", "") == "laguerre2") {
      if (alpha.size() != 1) throw ValidationError("laguerre2 takes a single alpha");
      doc["alpha"] = ratcore::to_string(alpha.front());
    } else {
      doc["alpha"] = as_json(alpha);
    }
  }
  return mop::family_from_json(doc);
}

MultiIndex index_of(const Settings& s, const WeightFamily& family) {
  const MultiIndex n = mop::parse_multi_index(s.get("n"));
  if (n.rank() != family.rank()) throw ValidationError("--n has rank " + std::to_string(n.rank()) + ", family has " +
                                                       std::to_string(family.rank()));
  return n;
}

// every n with |n| <= max-total when given, else the single --n
std::vector<MultiIndex> indices_of(const Settings& s, const WeightFamily& family) {
  if (!s.has("max-total")) return {index_of(s, family)};
  const unsigned max_total = static_cast<unsigned>(s.count("max-total", 0));
  std::vector<MultiIndex> out;
  std::vector<unsigned> e(family.rank(), 0);
  while (true) {
    unsigned t = 0;
    for (auto v : e) t += v;
    if (t <= max_total) out.emplace_back(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == max_total) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.total() < b.total() || (a.total() == b.total() && a < b);
  });
  return out;
}

std::size_t direction_of(const Settings& s, const WeightFamily& family) {
  const std::size_t d = s.count("direction", 1);
  if (d == 0 || d > family.rank()) throw ValidationError("--direction must lie in 1.." + std::to_string(family.rank()));
  return d;
}

PathSpec path_of(const Settings& s, const WeightFamily& family) {
  if (s.has("path")) {
    json doc;
    try {
      doc = json::parse(s.get("path"));
    } catch (const json::exception& e) {
      throw ValidationError("--path is not valid JSON: " + std::string(e.what()));
    }
    PathSpec p = mop::path_from_json(doc);
    if (p.start.rank() != family.rank()) throw ValidationError("--path rank does not match the family");
    mop::validate_path(p);
    return p;
  }
  return mop::straight_path(index_of(s, family), s.count("l", 1), direction_of(s, family));
}

std::uint64_t seed_of(const Settings& s) { return s.count("seed", 0); }

std::vector<PathSpec> paths_from(const Settings& s, const MultiIndex& n, std::size_t l) {
  if (s.has("path")) throw ValidationError("--path cannot be combined with a path sweep");
  return mop::enumerate_paths(n, l, s.count("cap", 50), seed_of(s));
}

int emit(std::ostream& out, const json& j) {
  out << j.dump() << '\n';
  return kPass;
}

int verdict(std::ostream& out, const std::string& check, bool ok, json details, json witness = nullptr) {
  out << json{{"check", check}, {"ok", ok}, {"details", std::move(details)}, {"witness", std::move(witness)}}.dump()
      << '\n';
  return ok ? kPass : kRefuted;
}

Rational superfactorial(std::size_t l) {
  Rational acc = 1;
  for (unsigned k = 1; k < l; ++k) acc *= ratcore::factorial(k);
  return acc;
}

// ---- construct ----------------------------------------------------------

int cmd_construct(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const MultiIndex n = index_of(s, family);
  const unsigned long type = s.count("type", 2);
  if (type == 1) {
    const auto form = mop::construct_type1(family, n);
    json polys = json::array();
    for (const auto& a : form.coeff_polys) polys.push_back(ratcore::poly_to_json(a));
    return emit(out, {{"type", 1}, {"coeff_polys", polys}});
  }
  if (type != 2) throw ValidationError("--type must be 1 or 2");
  const std::string method = s.get_or("method", "closed-form");
  if (method == "moments") return emit(out, ratcore::poly_report(mop::construct_type2(family, n)));
  if (method == "closed-form") return emit(out, ratcore::poly_report(mop::type2(family, n, mop::Method::ClosedForm)));
  if (method == "both") {
    const Poly a = mop::construct_type2(family, n);
    const Poly b = mop::type2(family, n, mop::Method::ClosedForm);
    if (a == b) return emit(out, ratcore::poly_report(a));
    out << json{{"ok", false}, {"moments", ratcore::poly_to_json(a)}, {"closed_form", ratcore::poly_to_json(b)}}.dump()
        << '\n';
    return kRefuted;
  }
  throw ValidationError("--method must be moments, closed-form or both");
}

// ---- wronskian ----------------------------------------------------------

int cmd_wronskian(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  if (s.flag("hankel")) {
    return emit(out, ratcore::poly_report(
                         wronsk::turanian(family, index_of(s, family), direction_of(s, family), s.count("l", 1))));
  }
  const PathSpec path = path_of(s, family);
  Poly w = wronsk::wronskian(family, path);
  if (s.flag("moments")) w /= superfactorial(path.length());
  json report = ratcore::poly_report(w);
  if (s.has("z")) report["value"] = ratcore::to_string(ratcore::evaluate(w, ratcore::parse_rational(s.get("z"))));
  return emit(out, report);
}

// ---- verify -------------------------------------------------------------

int verify_theorem1(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const std::size_t l = s.count("l", 2);
  if (l == 0 || l % 2 != 0) throw ValidationError("theorem1 needs an even --l");
  mop::Type2Table table(family);
  json results = json::array();
  json first = nullptr;
  bool ok = true;
  auto check = [&](const PathSpec& path) {
    const auto r = analyze::certify_positive(wronsk::wronskian(table, path), analyze::Domain::RealLine);
    results.push_back({{"path", mop::path_to_json(path)}, {"certified", r.certified()}});
    if (!r.certified()) {
      if (ok) first = {{"path", mop::path_to_json(path)}, {"positivity", analyze::to_json(r)}};
      ok = false;
    }
  };
  if (s.has("path")) {
    check(path_of(s, family));
  } else {
    for (const auto& n : indices_of(s, family))
      for (const auto& p : paths_from(s, n, l)) check(p);
  }
  return verdict(out, "theorem1", ok, {{"checked", results.size()}, {"results", results}}, first);
}

int verify_theorem2(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const std::size_t l = s.count("l", 1);
  if (l % 2 != 1) throw ValidationError("theorem2 needs an odd --l");
  mop::Type2Table table(family);
  json results = json::array();
  json first = nullptr;
  bool ok = true;
  auto check = [&](const PathSpec& path) {
    const Poly w = wronsk::wronskian(table, path);
    const auto profile = analyze::real_zero_profile(w);
    const bool count_ok = profile.count == static_cast<int>(path.start.total());
    json interlacing = json::array();
    bool interlace_ok = true;
    for (std::size_t d = 1; d <= family.rank(); ++d) {
      const PathSpec next = mop::shifted_path(path, d);
      const auto r = analyze::interlacing_check(w, wronsk::wronskian(table, next));
      interlacing.push_back({{"next", mop::path_to_json(next)}, {"ok", r.ok}});
      if (!r.ok && interlace_ok && ok) first = {{"path", mop::path_to_json(path)}, {"next", mop::path_to_json(next)}, {"interlacing", r.witness}};
      interlace_ok = interlace_ok && r.ok;
    }
    const bool this_ok = count_ok && profile.simple && interlace_ok;
    if (!this_ok && ok && first.is_null())
      first = {{"path", mop::path_to_json(path)}, {"count", profile.count}, {"simple", profile.simple}};
    ok = ok && this_ok;
    results.push_back({{"path", mop::path_to_json(path)},
                       {"count", profile.count},
                       {"expected", path.start.total()},
                       {"simple", profile.simple},
                       {"interlacing", interlacing}});
  };
  if (s.has("path")) {
    check(path_of(s, family));
  } else {
    for (const auto& n : indices_of(s, family))
      for (const auto& p : paths_from(s, n, l)) check(p);
  }
  return verdict(out, "theorem2", ok, {{"checked", results.size()}, {"results", results}}, first);
}

int verify_theorem3(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const PathSpec path = path_of(s, family);
  if (path.length() % 2 != 0) throw ValidationError("theorem3 needs an even --l");
  const std::string fallback = family.positive_support() ? "1/10,10,50" : "-5,5,50";
  const auto grid_spec = split(s.get_or("grid", fallback), ',');
  if (grid_spec.size() != 3) throw ValidationError("--grid expects lo,hi,count");
  const auto grid = analyze::uniform_grid(ratcore::parse_rational(grid_spec[0]), ratcore::parse_rational(grid_spec[1]),
                                          parse_count("grid", grid_spec[2]));
  const auto report =
      analyze::type1_wronskian_grid_sign(family, path, grid, static_cast<long>(s.count("precision", 256)));
  json witness = nullptr;
  if (!report.constant_sign) {
    for (const auto& smp : report.samples)
      if (smp.sign != report.sign) {
        witness = {{"x", ratcore::to_string(smp.x)}, {"sign", smp.sign}};
        break;
      }
  }
  return verdict(out, "theorem3", report.constant_sign, analyze::to_json(report), witness);
}

wronsk::TuranVariant variant_of(const Settings& s, const WeightFamily& family) {
  const std::string name = s.get("variant");
  if (name.find('(') != std::string::npos) return wronsk::parse_turan_variant(name);
  using Tag = wronsk::TuranVariant::Tag;
  static const std::map<std::string, Tag> names{{"hermite-pair", Tag::HermitePair},
                                                {"hermite-diag", Tag::HermiteDiag},
                                                {"laguerre1-two-param", Tag::LaguerreFirstTwoParam},
                                                {"laguerre2-two-param", Tag::LaguerreSecondTwoParam},
                                                {"plain", Tag::PlainTuran}};
  auto it = names.find(name);
  if (it == names.end()) throw ValidationError("unknown --variant '" + name + "'");
  const std::size_t j = s.count("j", 1);
  const std::size_t k = s.count("k", family.rank() >= 2 ? 2 : 1);
  return {it->second, j, k};
}

int verify_turan(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const auto variant = variant_of(s, family);
  using Tag = wronsk::TuranVariant::Tag;
  analyze::Domain domain = analyze::Domain::RealLine;
  if (variant.tag == Tag::LaguerreFirstTwoParam || variant.tag == Tag::LaguerreSecondTwoParam ||
      (variant.tag == Tag::PlainTuran && family.positive_support()))
    domain = analyze::Domain::PositiveHalfLine;
  if (s.has("domain")) domain = analyze::parse_domain(s.get("domain"));

  json results = json::array();
  json first = nullptr;
  bool ok = true;
  for (const auto& n : indices_of(s, family)) {
    const Poly expr = wronsk::turan_expression(family, n, variant);
    const auto r = analyze::certify_positive(expr, domain);
    results.push_back({{"n", n.to_string()}, {"certified", r.certified()}, {"positivity", analyze::to_json(r)}});
    if (!r.certified() && ok) first = {{"n", n.to_string()}, {"x", ratcore::to_string(r.refutation->point)},
                                       {"value", ratcore::to_string(r.refutation->value)}};
    ok = ok && r.certified();
  }
  return verdict(out, "turan",
                 ok, {{"variant", wronsk::to_string(variant)}, {"domain", analyze::to_string(domain)}, {"results", results}},
                 first);
}

int verify_hankel(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  if (!std::holds_alternative<mop::Hermite>(family.kind())) throw ValidationError("hankel-id needs a Hermite family");
  const auto& c = std::get<mop::Hermite>(family.kind()).c;
  std::vector<std::size_t> directions;
  if (s.has("direction")) {
    directions.push_back(direction_of(s, family));
  } else {
    for (std::size_t j = 1; j <= family.rank(); ++j) directions.push_back(j);
  }
  std::vector<std::size_t> lengths;
  if (s.has("l")) {
    lengths.push_back(s.count("l", 1));
  } else {
    for (std::size_t l = 1; l <= 4; ++l) lengths.push_back(l);
  }
  std::size_t checked = 0;
  json first = nullptr;
  bool ok = true;
  for (const auto& n : indices_of(s, family))
    for (auto j : directions)
      for (auto l : lengths) {
        const auto r = wronsk::hankel_wronskian_identity_check(n, c, j, l);
        ++checked;
        if (!r.ok && ok) first = r.witness;
        ok = ok && r.ok;
      }
  return verdict(out, "hankel-id", ok, {{"checked", checked}}, first);
}

int verify_path_free(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const std::size_t l = s.count("l", 2);
  std::size_t checked = 0;
  json first = nullptr;
  bool ok = true;
  for (const auto& n : indices_of(s, family)) {
    const auto r = wronsk::path_independence_check(family, n, l, s.count("cap", 50), seed_of(s));
    ++checked;
    if (!r.ok && ok) first = r.witness;
    ok = ok && r.ok;
  }
  return verdict(out, "path-free", ok, {{"checked", checked}, {"l", l}}, first);
}

int verify_confluent(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const PathSpec path = path_of(s, family);
  const Rational z = ratcore::parse_rational(s.get_or("z", "0"));
  const auto eps = parse_rationals(s.get_or("eps", "1/10000,1/100000,1/1000000"));
  const auto report = wronsk::confluent_check(family, path, z, eps);
  const bool ok = wronsk::decays_linearly(report);
  return verdict(out, "confluent", ok, wronsk::to_json(report), ok ? json(nullptr) : json(wronsk::residual_ratios(report)));
}

int verify_at_probe(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const auto report = mop::at_system_probe(family, index_of(s, family), s.count("trials", 100), seed_of(s),
                                           static_cast<long>(s.count("precision", 256)));
  json witness = nullptr;
  if (report.flagged) {
    for (const auto& t : report.trials)
      if (t.relative_det == report.min_relative_det) {
        json pts = json::array();
        for (const auto& x : t.points) pts.push_back(ratcore::to_string(x));
        witness = {{"points", pts}, {"relative_det", t.relative_det}};
        break;
      }
  }
  return verdict(out, "at-probe", !report.flagged, mop::to_json(report), witness);
}

int verify_raising(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  std::vector<std::size_t> directions;
  if (s.has("direction")) {
    directions.push_back(direction_of(s, family));
  } else {
    for (std::size_t j = 1; j <= family.rank(); ++j) directions.push_back(j);
  }
  std::size_t checked = 0;
  std::size_t skipped = 0;
  json first = nullptr;
  bool ok = true;
  for (const auto& n : indices_of(s, family)) {
    for (auto j : directions) {
      std::optional<WeightFamily> lower;
      try {
        lower = family.lowered(j);
      } catch (const ValidationError&) {
        ++skipped;
        continue;
      }
      const Poly raised = mop::raising_apply(family, n, j);
      const Poly direct = mop::construct_type2(*lower, n.raised(j));
      ++checked;
      if (raised != direct && ok)
        first = {{"n", n.to_string()}, {"direction", j}, {"raised", ratcore::poly_to_json(raised)},
                 {"direct", ratcore::poly_to_json(direct)}};
      ok = ok && raised == direct;
    }
  }
  return verdict(out, "raising", ok, {{"checked", checked}, {"skipped", skipped}}, first);
}

// ---- roots --------------------------------------------------------------

int cmd_roots(const Settings& s, std::ostream& out) {
  const WeightFamily family = family_of(s);
  const std::string by = s.get_or("series-by", "l");
  if (by != "l" && by != "n") throw ValidationError("--series-by must be l or n");
  std::vector<MultiIndex> starts;
  for (const auto& part : split(s.get("n"), ';')) {
    starts.push_back(mop::parse_multi_index(part));
    if (starts.back().rank() != family.rank()) throw ValidationError("--n rank does not match the family");
  }
  std::vector<std::size_t> lengths;
  for (const auto& part : split(s.get_or("l", "1"), ',')) lengths.push_back(parse_count("l", part));
  const std::size_t direction = direction_of(s, family);
  analyze::RootOptions options;
  if (s.has("tol")) options.tol = std::stod(s.get("tol"));
  options.precision_bits = static_cast<long>(s.count("precision", 256));

  mop::Type2Table table(family);
  std::vector<std::pair<std::string, analyze::RootSet>> series;
  auto add = [&](const MultiIndex& n, std::size_t l) {
    const Poly w = wronsk::wronskian(table, mop::straight_path(n, l, direction));
    if (w.degree() < 1) return;
    const std::string label = by == "l" ? "l=" + std::to_string(l) : "n=" + n.to_string();
    series.emplace_back(label, analyze::complex_roots(w, options));
  };
  if (by == "l") {
    for (auto l : lengths)
      for (const auto& n : starts) add(n, l);
  } else {
    for (const auto& n : starts)
      for (auto l : lengths) add(n, l);
  }
  if (s.has("output")) {
    std::ofstream file(s.get("output"));
    if (!file) throw ValidationError("cannot write " + s.get("output"));
    analyze::write_roots_csv(file, series);
  } else {
    analyze::write_roots_csv(out, series);
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Multiple orthogonal polynomials: construction, Wronskians, certification and root export", "mopw");
  app.require_subcommand(1);

  Command construct(app, "construct", "type II polynomial (or type I form) as JSON");
  add_family_options(construct);
  construct.option("n", "multi-index, e.g. 1,1")
      .option("method", "moments | closed-form | both")
      .option("type", "2 (default) or 1");

  Command wronskian(app, "wronskian", "Wronskian along a path, or the Turanian with --hankel");
  add_family_options(wronskian);
  wronskian.option("n", "start multi-index")
      .option("path", "path JSON {\"start\":[..],\"steps\":[..]}")
      .option("l", "path length")
      .option("direction", "step direction of the straight path (1-based)")
      .option("z", "also evaluate at this rational")
      .flag("hankel", "Hankel determinant along --direction instead")
      .flag("moments", "divide by 0! 1! ... (l-1)!");

  CLI::App* verify = app.add_subcommand("verify", "exact and numerical checks; exit 1 on refutation");
  verify->require_subcommand(1);
  using Handler = std::function<int(const Settings&, std::ostream&)>;
  std::vector<std::pair<std::unique_ptr<Command>, Handler>> checks;
  auto check = [&](const std::string& name, const std::string& description, Handler handler,
                   std::initializer_list<std::pair<const char*, const char*>> extra) {
    auto c = std::make_unique<Command>(*verify, name, description);
    add_family_options(*c);
    for (const auto& [opt, desc] : extra) c->option(opt, desc);
    checks.emplace_back(std::move(c), std::move(handler));
  };
  check("theorem1", "W > 0 on R for even l", verify_theorem1,
        {{"n", "start"}, {"max-total", "sweep all |n| <= N"}, {"l", "even length"}, {"path", "single path JSON"},
         {"cap", "path cap"}, {"seed", "sampling seed"}});
  check("theorem2", "|n| simple real zeros and interlacing for odd l", verify_theorem2,
        {{"n", "start"}, {"max-total", "sweep all |n| <= N"}, {"l", "odd length"}, {"path", "single path JSON"},
         {"cap", "path cap"}, {"seed", "sampling seed"}});
  check("theorem3", "heuristic sign of the type I Wronskian on a grid", verify_theorem3,
        {{"n", "start"}, {"l", "even length"}, {"path", "path JSON"}, {"direction", "step direction"},
         {"grid", "lo,hi,count"}, {"precision", "bits"}});
  check("turan", "Turan-type expression positive on its domain", verify_turan,
        {{"n", "multi-index"}, {"max-total", "sweep all |n| <= N"}, {"variant", "plain | hermite-diag | hermite-pair | laguerre1-two-param | laguerre2-two-param"},
         {"j", "first direction"}, {"k", "second direction"}, {"domain", "R | (0,inf)"}});
  check("hankel-id", "Wronskian = (-2)^{l(l-1)/2} Hankel for multiple Hermite", verify_hankel,
        {{"n", "multi-index"}, {"max-total", "sweep all |n| <= N"}, {"direction", "direction (default all)"},
         {"l", "size (default 1..4)"}});
  check("path-free", "Wronskian independent of the path", verify_path_free,
        {{"n", "start"}, {"max-total", "sweep all |n| <= N"}, {"l", "length"}, {"cap", "path cap"},
         {"seed", "sampling seed"}});
  check("confluent", "confluent limit residual is O(eps)", verify_confluent,
        {{"n", "start"}, {"l", "length"}, {"path", "path JSON"}, {"direction", "step direction"},
         {"z", "point"}, {"eps", "comma-separated steps"}});
  check("at-probe", "random Chebyshev-system determinants", verify_at_probe,
        {{"n", "multi-index"}, {"trials", "number of point sets"}, {"seed", "sampling seed"},
         {"precision", "bits"}});
  check("raising", "raising relation against direct construction", verify_raising,
        {{"n", "multi-index"}, {"max-total", "sweep all |n| <= N"}, {"direction", "direction (default all)"}});

  Command roots(app, "roots", "complex zeros of Wronskians as CSV re,im,series");
  add_family_options(roots);
  roots.option("n", "start multi-index; ';' separates several")
      .option("l", "comma-separated lengths")
      .option("direction", "step direction")
      .option("series-by", "l | n")
      .option("tol", "relative residual tolerance")
      .option("precision", "refinement bits")
      .option("output", "CSV file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, m;
    const int code = app.exit(e, o, m);
    out << o.str();
    err << m.str();
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (construct.app->parsed()) return cmd_construct(construct.settings(), out);
    if (wronskian.app->parsed()) return cmd_wronskian(wronskian.settings(), out);
    if (roots.app->parsed()) return cmd_roots(roots.settings(), out);
    for (const auto& [c, handler] : checks)
      if (c->app->parsed()) return handler(c->settings(), out);
    err << "no command given\n";
    return kUsage;
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace mopw::cli
