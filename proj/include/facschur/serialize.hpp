#pragma once

#include "facschur/poly.hpp"
#include "facschur/supersym.hpp"

#include "json.hpp"

#include <string_view>

namespace facschur {

// A polynomial is a JSON list of terms in canonical order:
//   [{"coeff": "3/2", "mono": {"X:1": 2, "A:-1": 1}}, ...]
// The zero polynomial is the empty list.
nlohmann::json poly_to_json(const Poly& p);

// Accepts terms in any order; repeated monomials are summed. Throws ParseError.
Poly poly_from_json(const nlohmann::json& j);
Poly parse_poly_json(std::string_view text);

// {"coefficients": {"[1]": "1", ...}, "reconstruction_exact": true}
nlohmann::json expansion_to_json(const BasisExpansion& e);

} // namespace facschur
