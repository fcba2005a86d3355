#pragma once

// JSON wire forms. A polynomial is an array of base-10 coefficient strings in
// ascending degree; a rational function is {"num": [...], "den": [...],
// "factored": "<display string>"}; a signed square root is
// {"sign": -1|0|1, "radicand": "<p/q>"}.

#include <json.hpp>

#include "soncoup/exact.hpp"
#include "soncoup/value.hpp"

namespace soncoup {

nlohmann::json to_json(const BigRat& q);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFunc& f);
nlohmann::json to_json(const SqrtRational& s);
nlohmann::json to_json(const CouplingValue& v);

BigRat bigrat_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
/// Reads num/den and renormalizes; "factored" is ignored.
RatFunc ratfunc_from_json(const nlohmann::json& j);
SqrtRational sqrt_rational_from_json(const nlohmann::json& j);

} // namespace soncoup
