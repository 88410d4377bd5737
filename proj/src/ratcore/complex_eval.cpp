#include "mopw/ratcore/complex_eval.hpp"

#include <cmath>
#include <vector>

#include "mopw/error.hpp"

namespace mopw::ratcore {

ScaledValue evaluate_complex(const Poly& p, std::complex<double> z) {
  if (p.is_zero()) return {};
  Rational max_mag = 0;
  for (const auto& c : p.coeffs()) {
    if (abs(c) > max_mag) max_mag = abs(c);
  }
  const double scale = max_mag.get_d();
  if (!std::isfinite(scale)) throw NumericalError("coefficient scale overflows double precision");
  std::complex<double> acc = 0;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    const Rational scaled = c[k] / max_mag;
    acc = acc * z + scaled.get_d();
  }
  return {acc, scale};
}

}  // namespace mopw::ratcore
