#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mopw/error.hpp"
#include "mopw/ratcore/poly.hpp"
#include "mopw/ratcore/rational.hpp"

namespace mopw::ratcore {

/// Dense row-major matrix. Indices are zero-based.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw ValidationError("matrix entry count does not match its shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const T> entries() const { return entries_; }

  /// Copy with the listed rows and columns removed (zero-based, any order).
  Matrix without(std::span<const std::size_t> drop_rows, std::span<const std::size_t> drop_cols) const {
    auto keep = [](std::size_t n, std::span<const std::size_t> drop) {
      std::vector<std::size_t> kept;
      for (std::size_t i = 0; i < n; ++i) {
        bool dropped = false;
        for (auto d : drop) dropped = dropped || d == i;
        if (!dropped) kept.push_back(i);
      }
      return kept;
    };
    const auto rs = keep(rows_, drop_rows);
    const auto cs = keep(cols_, drop_cols);
    Matrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using PolyMatrix = Matrix<Poly>;
using RationalMatrix = Matrix<Rational>;

/// Exact determinant by fraction-free (Bareiss) elimination. The empty matrix
/// has determinant 1. Throws ValidationError when the matrix is not square.
Poly determinant(const PolyMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Solves A x = b exactly. Rows are cleared to integers, reduced by
/// fraction-free elimination and back-substituted over the rationals.
/// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace mopw::ratcore
