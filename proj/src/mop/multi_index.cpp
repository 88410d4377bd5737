#include "mopw/mop/multi_index.hpp"

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "mopw/error.hpp"

namespace mopw::mop {

MultiIndex::MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("multi-index needs at least one component");
}

MultiIndex MultiIndex::zero(std::size_t rank) { return MultiIndex(std::vector<unsigned>(rank, 0)); }

unsigned MultiIndex::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0u); }

unsigned MultiIndex::at(std::size_t direction) const {
  if (direction < 1 || direction > rank()) throw ValidationError("direction out of range");
  return entries_[direction - 1];
}

MultiIndex MultiIndex::raised(std::size_t direction, unsigned by) const {
  if (direction < 1 || direction > rank()) {
    throw ValidationError("direction " + std::to_string(direction) + " outside 1.." + std::to_string(rank()));
  }
  auto e = entries_;
  e[direction - 1] += by;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i];
  out << ")";
  return out.str();
}

bool componentwise_le(const MultiIndex& a, const MultiIndex& b) {
  if (a.rank() != b.rank()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a.entries()[i] > b.entries()[i]) return false;
  }
  return true;
}

MultiIndex parse_multi_index(const std::string& text) {
  std::vector<unsigned> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (v < 0 || item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      entries.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw ValidationError("bad multi-index '" + text + "'");
    }
  }
  return MultiIndex(std::move(entries));
}

std::vector<MultiIndex> validate_path(const PathSpec& path) {
  std::vector<MultiIndex> out{path.start};
  for (auto d : path.steps) out.push_back(out.back().raised(d));
  return out;
}

PathSpec straight_path(const MultiIndex& start, std::size_t length, std::size_t direction) {
  if (length < 1) throw ValidationError("path length must be at least 1");
  if (direction < 1 || direction > start.rank()) throw ValidationError("direction out of range");
  return {start, std::vector<std::size_t>(length - 1, direction)};
}

std::vector<PathSpec> enumerate_paths(const MultiIndex& start, std::size_t length, std::size_t cap,
                                      std::uint64_t seed) {
  if (length < 1) throw ValidationError("path length must be at least 1");
  if (cap < 1) throw ValidationError("path cap must be positive");
  const std::size_t r = start.rank();
  const std::size_t steps = length - 1;
  // r^steps, saturating once past the cap
  std::size_t total = 1;
  for (std::size_t i = 0; i < steps && total <= cap; ++i) total *= r;

  std::vector<PathSpec> out;
  if (total <= cap) {
    std::vector<std::size_t> digits(steps, 1);
    for (std::size_t count = 0; count < total; ++count) {
      out.push_back({start, digits});
      for (std::size_t i = steps; i-- > 0;) {
        if (++digits[i] <= r) break;
        digits[i] = 1;
      }
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dir(1, r);
  std::set<std::vector<std::size_t>> seen;
  while (seen.size() < cap) {
    std::vector<std::size_t> digits(steps);
    for (auto& d : digits) d = dir(rng);
    if (seen.insert(digits).second) out.push_back({start, std::move(digits)});
  }
  return out;
}

PathSpec shifted_path(const PathSpec& p, std::size_t next_direction) {
  PathSpec out{p.start, {}};
  if (!p.steps.empty()) {
    out.start = p.start.raised(p.steps.front());
    out.steps.assign(p.steps.begin() + 1, p.steps.end());
    out.steps.push_back(next_direction);
  } else {
    out.start = p.start.raised(next_direction);
  }
  validate_path(out);
  return out;
}

nlohmann::json path_to_json(const PathSpec& p) {
  return {{"start", std::vector<unsigned>(p.start.entries().begin(), p.start.entries().end())}, {"steps", p.steps}};
}

PathSpec path_from_json(const nlohmann::json& j) {
  try {
    std::vector<unsigned> start;
    for (long v : j.at("start").get<std::vector<long>>()) {
      if (v < 0) throw ValidationError("multi-index entries must be non-negative");
      start.push_back(static_cast<unsigned>(v));
    }
    PathSpec p{MultiIndex(std::move(start)), {}};
    if (j.contains("steps")) {
      for (long d : j.at("steps").get<std::vector<long>>()) {
        if (d < 1) throw ValidationError("path directions are numbered from 1");
        p.steps.push_back(static_cast<std::size_t>(d));
      }
    }
    validate_path(p);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad path JSON: ") + e.what());
  }
}

}  // namespace mopw::mop
