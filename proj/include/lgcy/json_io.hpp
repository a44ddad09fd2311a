#pragma once

#include "json.hpp"

#include "lgcy/poly.hpp"

namespace lgcy {

using Json = nlohmann::ordered_json;

// {"nvars": N, "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Json rationals_to_json(std::span<const Rational> qs);

// 64-bit FNV-1a over text, rendered as 16 hex digits.
std::string content_hash(std::string_view text);

}  // namespace lgcy
