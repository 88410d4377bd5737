#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "mopw/ratcore/poly.hpp"

namespace mopw::analyze {

using ratcore::Poly;

struct RootSet {
  /// Sorted by real part, then imaginary part.
  std::vector<std::complex<double>> roots;
  /// Largest coefficient magnitude of the input.
  double residual_scale = 1.0;
  int degree = 0;
  /// max over roots of |p(z)| / sum_k |a_k| |z|^k, evaluated at the working
  /// precision.
  double max_relative_residual = 0.0;
};

struct RootOptions {
  double tol = 1e-9;
  int max_iterations = 2000;
  long precision_bits = 256;
};

/// All complex roots, with multiplicity, by Aberth-Ehrlich iteration in double
/// precision followed by refinement at the working precision. Real-coefficient
/// symmetry is enforced: real roots (counted exactly for square-free input)
/// get a zero imaginary part and the rest are paired with their conjugates.
/// Throws ValidationError for constant input and NumericalError when the
/// iteration does not reach the tolerance.
RootSet complex_roots(const Poly& p, const RootOptions& options = {});

/// Header "re,im,series"; one row per root, printed with %.17g.
void write_roots_csv(std::ostream& out, const std::vector<std::pair<std::string, RootSet>>& series);

}  // namespace mopw::analyze
