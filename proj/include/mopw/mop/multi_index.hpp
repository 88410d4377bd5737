#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace mopw::mop {

/// Point of N^r. Directions are numbered 1..r throughout the library, the way
/// unit vectors e_1..e_r are.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<unsigned> entries);
  static MultiIndex zero(std::size_t rank);

  std::size_t rank() const { return entries_.size(); }
  /// |n| = n_1 + ... + n_r.
  unsigned total() const;
  /// Component along a direction in 1..r.
  unsigned at(std::size_t direction) const;
  std::span<const unsigned> entries() const { return entries_; }

  /// n + by * e_direction.
  MultiIndex raised(std::size_t direction, unsigned by = 1) const;

  /// "(2,3)"
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> entries_;
};

/// Componentwise a <= b.
bool componentwise_le(const MultiIndex& a, const MultiIndex& b);

/// Parses "1,1" into (1,1).
MultiIndex parse_multi_index(const std::string& text);

/// Monotone unit-step path: start, then one unit step per entry of steps.
struct PathSpec {
  MultiIndex start;
  std::vector<std::size_t> steps;

  /// Number of multi-indices on the path (steps + 1).
  std::size_t length() const { return steps.size() + 1; }
};

/// Materializes (n_0, ..., n_{l-1}); throws ValidationError for a direction
/// outside 1..r.
std::vector<MultiIndex> validate_path(const PathSpec& path);

/// Path of the given length that repeats one direction.
PathSpec straight_path(const MultiIndex& start, std::size_t length, std::size_t direction = 1);

/// Every monotone path of the given length from start when there are at most
/// cap of them; otherwise cap distinct paths drawn with the seed. Order is
/// deterministic.
std::vector<PathSpec> enumerate_paths(const MultiIndex& start, std::size_t length, std::size_t cap = 50,
                                      std::uint64_t seed = 0);

/// The path dropping the first index of p and appending one more step.
PathSpec shifted_path(const PathSpec& p, std::size_t next_direction);

nlohmann::json path_to_json(const PathSpec& p);
PathSpec path_from_json(const nlohmann::json& j);

}  // namespace mopw::mop
