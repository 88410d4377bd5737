#pragma once

#include <complex>

#include "mopw/ratcore/poly.hpp"

namespace mopw::ratcore {

struct ScaledValue {
  /// p(z) / scale.
  std::complex<double> value;
  /// Largest coefficient magnitude of p; 1 for the zero polynomial.
  double scale = 1.0;
};

/// Evaluates p / max|coeff| at z in double precision. Throws NumericalError
/// when the scale itself is not representable as a double.
ScaledValue evaluate_complex(const Poly& p, std::complex<double> z);

}  // namespace mopw::ratcore
