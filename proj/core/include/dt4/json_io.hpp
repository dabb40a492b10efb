#pragma once

#include <json.hpp>

#include "dt4/formulas.hpp"

namespace dt4 {

using Json = nlohmann::ordered_json;

// Canonical forms: terms sorted by exponent vector, coefficients as "p/q"
// strings, exponents as integers in quarter units.
Json json_of(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j, std::size_t nvars);

Json json_of(const RationalFn& f);
RationalFn rationalfn_from_json(const Json& j, std::size_t nvars);

Json json_of(const Series<KFrac>& s);
Json json_of(const Series<CohomFrac>& s);

// modular compute output: one residue per drawn point per coefficient
Json fingerprint_json(const Series<Zp>& s);

Json json_of(const Report& r, bool with_timings);

}  // namespace dt4
