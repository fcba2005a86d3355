#pragma once

#include <doctest.h>

#include "soncoup/exact.hpp"
#include "soncoup/value.hpp"

namespace soncoup::test {

inline RatFunc rf(const char* text) { return parse_ratfunc(text); }
inline Poly poly(const char* text) {
  const RatFunc f = parse_ratfunc(text);
  REQUIRE(f.den() == Poly(1));
  return f.num();
}
inline BigRat q(const char* text) { return BigRat::parse(text); }

inline RatFunc sym(const CouplingValue& v) { return std::get<RatFunc>(v); }
inline BigRat num(const CouplingValue& v) { return std::get<BigRat>(v); }

} // namespace soncoup::test

namespace doctest {
template <>
struct StringMaker<soncoup::BigRat> {
  static String convert(const soncoup::BigRat& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<soncoup::Poly> {
  static String convert(const soncoup::Poly& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<soncoup::RatFunc> {
  static String convert(const soncoup::RatFunc& v) { return v.to_string().c_str(); }
};
} // namespace doctest
