#include "mopw/wronsk/wronskian.hpp"

#include "mopw/error.hpp"

namespace mopw::wronsk {

PolyMatrix wronskian_matrix(Type2Table& table, const PathSpec& path) {
  const auto indices = mop::validate_path(path);
  const std::size_t l = indices.size();
  PolyMatrix m(l, l);
  for (std::size_t j = 0; j < l; ++j) {
    Poly p = table(indices[j]);
    for (std::size_t i = 0; i < l; ++i) {
      m(i, j) = p;
      p = ratcore::derivative(p);
    }
  }
  return m;
}

Poly wronskian(Type2Table& table, const PathSpec& path) { return ratcore::determinant(wronskian_matrix(table, path)); }

Poly wronskian(const WeightFamily& family, const PathSpec& path) {
  Type2Table table(family);
  return wronskian(table, path);
}

Poly hankel_determinant(Type2Table& table, const MultiIndex& n, std::size_t direction, std::size_t l) {
  if (l == 0) throw ValidationError("Hankel size must be at least 1");
  if (direction == 0 || direction > n.rank()) throw ValidationError("direction outside 1..r");
  std::vector<Poly> diagonal;
  for (std::size_t s = 0; s + 1 < 2 * l; ++s) diagonal.push_back(table(n.raised(direction, static_cast<unsigned>(s))));
  PolyMatrix m(l, l);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < l; ++b) m(a, b) = diagonal[a + b];
  return ratcore::determinant(m);
}

Poly turanian(Type2Table& table, const MultiIndex& n, std::size_t direction, std::size_t l) {
  Poly h = hankel_determinant(table, n, direction, l);
  return (l * (l - 1) / 2) % 2 == 0 ? h : -h;
}

Poly turanian(const WeightFamily& family, const MultiIndex& n, std::size_t direction, std::size_t l) {
  Type2Table table(family);
  return turanian(table, n, direction, l);
}

}  // namespace mopw::wronsk
