#include "soncoup/serialize.hpp"

namespace soncoup {

nlohmann::json to_json(const BigRat& q) { return q.to_string(); }

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

nlohmann::json to_json(const RatFunc& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"factored", f.to_string()}};
}

nlohmann::json to_json(const SqrtRational& s) { return {{"sign", s.sign()}, {"radicand", to_json(s.radicand())}}; }

nlohmann::json to_json(const CouplingValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

BigRat bigrat_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw ParseError("expected a rational as a string, got " + j.dump());
  return BigRat::parse(j.get<std::string>());
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
  std::vector<BigRat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(bigrat_from_json(c));
  return Poly(std::move(coeffs));
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError("expected {\"num\": [...], \"den\": [...]}, got " + j.dump());
  return RatFunc::normalize(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

SqrtRational sqrt_rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sign") || !j.contains("radicand") || !j.at("sign").is_number_integer())
    throw ParseError("expected {\"sign\": int, \"radicand\": \"p/q\"}, got " + j.dump());
  try {
    return SqrtRational(j.at("sign").get<int>(), bigrat_from_json(j.at("radicand")));
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  }
}

} // namespace soncoup
