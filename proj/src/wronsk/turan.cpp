#include "mopw/wronsk/turan.hpp"

#include <regex>

#include "mopw/error.hpp"

namespace mopw::wronsk {

namespace {

struct TagName {
  TuranVariant::Tag tag;
  const char* name;
  bool two_directions;
};

constexpr TagName kTags[] = {
    {TuranVariant::Tag::HermitePair, "HermitePair", true},
    {TuranVariant::Tag::HermiteDiag, "HermiteDiag", false},
    {TuranVariant::Tag::LaguerreFirstTwoParam, "LaguerreFirstTwoParam", true},
    {TuranVariant::Tag::LaguerreSecondTwoParam, "LaguerreSecondTwoParam", true},
    {TuranVariant::Tag::PlainTuran, "PlainTuran", false},
};

const TagName& lookup(TuranVariant::Tag tag) {
  for (const auto& t : kTags)
    if (t.tag == tag) return t;
  throw ValidationError("unknown Turan variant");
}

template <class Kind>
void require_kind(const WeightFamily& family, const char* what) {
  if (!std::holds_alternative<Kind>(family.kind())) throw ValidationError(std::string(what) + " needs a matching family");
}

}  // namespace

TuranVariant parse_turan_variant(const std::string& text) {
  static const std::regex pattern(R"(\s*([A-Za-z]+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, pattern)) {
    for (const auto& t : kTags) {
      if (m[1] != t.name || m[3].matched != t.two_directions) continue;
      TuranVariant v{t.tag, std::stoul(m[2]), 1};
      if (t.two_directions) v.k = std::stoul(m[3]);
      return v;
    }
  }
  throw ValidationError("cannot parse Turan variant '" + text + "'");
}

std::string to_string(const TuranVariant& v) {
  const auto& t = lookup(v.tag);
  std::string out = std::string(t.name) + "(" + std::to_string(v.j);
  if (t.two_directions) out += "," + std::to_string(v.k);
  return out + ")";
}

Poly turan_expression(const WeightFamily& family, const MultiIndex& n, const TuranVariant& variant) {
  const std::size_t r = family.rank();
  if (n.rank() != r) throw ValidationError("multi-index rank does not match the family");
  const std::size_t j = variant.j;
  const std::size_t k = lookup(variant.tag).two_directions ? variant.k : j;
  if (j == 0 || j > r || k == 0 || k > r) throw ValidationError("Turan direction outside 1..r");

  Type2Table p(family);
  switch (variant.tag) {
    case TuranVariant::Tag::HermitePair:
    case TuranVariant::Tag::HermiteDiag:
      require_kind<mop::Hermite>(family, "Hermite Turan expression");
      return p(n.raised(j)) * p(n.raised(k)) - p(n) * p(n.raised(j).raised(k));
    case TuranVariant::Tag::PlainTuran:
      return p(n.raised(j)) * p(n.raised(j)) - p(n) * p(n.raised(j, 2));
    case TuranVariant::Tag::LaguerreFirstTwoParam: {
      require_kind<mop::LaguerreFirst>(family, "first-kind two-parameter expression");
      if (std::get<mop::LaguerreFirst>(family.kind()).alpha[j - 1] <= 0)
        throw ValidationError("two-parameter inequality needs alpha_j > 0");
      Type2Table lower(family.lowered(j));
      return p(n.raised(k)) * lower(n.raised(j)) - p(n) * lower(n.raised(j).raised(k));
    }
    case TuranVariant::Tag::LaguerreSecondTwoParam: {
      require_kind<mop::LaguerreSecond>(family, "second-kind two-parameter expression");
      if (std::get<mop::LaguerreSecond>(family.kind()).alpha <= 0)
        throw ValidationError("two-parameter inequality needs alpha > 0");
      Type2Table lower(family.lowered(j));
      return p(n.raised(k)) * lower(n.raised(j)) - p(n) * lower(n.raised(j).raised(k));
    }
  }
  throw ValidationError("unknown Turan variant");
}

}  // namespace mopw::wronsk
