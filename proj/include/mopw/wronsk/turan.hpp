#pragma once

#include <cstddef>
#include <string>

#include "mopw/wronsk/wronskian.hpp"

namespace mopw::wronsk {

struct TuranVariant {
  enum class Tag { HermitePair, HermiteDiag, LaguerreFirstTwoParam, LaguerreSecondTwoParam, PlainTuran };
  Tag tag;
  std::size_t j = 1;
  /// Unused by HermiteDiag and PlainTuran.
  std::size_t k = 1;
};

/// Parses "HermitePair(1,2)", "HermiteDiag(1)", "LaguerreFirstTwoParam(1,2)",
/// "LaguerreSecondTwoParam(1,2)" or "PlainTuran(1)".
TuranVariant parse_turan_variant(const std::string& text);
std::string to_string(const TuranVariant& v);

/// HermitePair:   H_{n+e_j} H_{n+e_k} - H_n H_{n+e_j+e_k}
/// HermiteDiag:   H_{n+e_j}^2 - H_n H_{n+2e_j}
/// LaguerreFirstTwoParam:
///   L^a_{n+e_k} L^{a-e_j}_{n+e_j} - L^a_n L^{a-e_j}_{n+e_j+e_k}      (a_j > 0)
/// LaguerreSecondTwoParam:
///   L^{(a,c)}_{n+e_k} L^{(a-1,c)}_{n+e_j} - L^{(a,c)}_n L^{(a-1,c)}_{n+e_j+e_k}   (a > 0)
/// PlainTuran:    P_{n+e_j}^2 - P_n P_{n+2e_j}, any family
Poly turan_expression(const WeightFamily& family, const MultiIndex& n, const TuranVariant& variant);

}  // namespace mopw::wronsk
