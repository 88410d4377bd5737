#pragma once

#include <json.hpp>

#include "mopw/ratcore/poly.hpp"
#include "mopw/ratcore/rational.hpp"

namespace mopw::ratcore {

/// Polynomials travel as arrays of canonical rational strings, lowest power
/// first; the zero polynomial is [].
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

/// {"poly": [...], "degree": d, "leading": "p/q"}
nlohmann::json poly_report(const Poly& p);

/// Accepts a JSON string ("3/5") or an integer.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace mopw::ratcore
