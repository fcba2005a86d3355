#include <random>

#include "helpers.hpp"
#include "soncoup/serialize.hpp"

using namespace soncoup;
using namespace soncoup::test;

TEST_SUITE("exact") {

TEST_CASE("BigRat stays in lowest terms with a positive denominator") {
  const BigRat x(6, -4);
  CHECK(x.num() == -3);
  CHECK(x.den() == 2);
  CHECK(BigRat::parse(" -10/15 ") == BigRat(-2, 3));
  CHECK_THROWS_AS(BigRat(1, 0), ZeroDenominator);
  CHECK_THROWS_AS(BigRat(1) / BigRat(0), ZeroDenominator);
  CHECK_THROWS_AS(BigRat::parse("1/x"), ParseError);
  CHECK(BigRat::factorial(20) == BigRat::parse("2432902008176640000"));
  CHECK(BigRat(3, 2).floor() == 1);
  CHECK(BigRat(-3, 2).floor() == -2);
  CHECK(BigRat(-2, 3).pow(-3) == BigRat(-27, 8));
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(poly("n-1"), Poly()) == poly("n-1"));
  CHECK(poly_gcd(poly("n^2-1"), poly("n-1")) == poly("n-1"));
  CHECK(poly_gcd(poly("n^2+4n-24"), poly("n+2")) == Poly(1));
  CHECK(poly_gcd(poly("3n-6"), poly("6n^2-24")) == poly("n-2"));
}

TEST_CASE("poly_gcd(p r, q r) = r gcd(p, q) up to normalization") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-6, 6), deg(0, 3);
  auto random_poly = [&] {
    std::vector<BigRat> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    c.back() = coeff(rng) >= 0 ? 1 : -2; // nonzero leading term
    return Poly(c);
  };
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(), qq = random_poly(), r = random_poly();
    CHECK(poly_gcd(p * r, qq * r) == (r * poly_gcd(p, qq)).monic());
  }
}

TEST_CASE("normalize examples") {
  const RatFunc a = RatFunc::normalize(poly("4(n-2)"), poly("4(n-1)"));
  CHECK(a.num() == poly("n-2"));
  CHECK(a.den() == poly("n-1"));
  const RatFunc b = RatFunc::normalize(poly("n^2-1"), poly("n-1"));
  CHECK(b.num() == poly("n+1"));
  CHECK(b.den() == Poly(1));
  const RatFunc c = RatFunc::normalize(poly("-n"), poly("-n+1"));
  CHECK(c.num() == poly("n"));
  CHECK(c.den() == poly("n-1"));
  CHECK_THROWS_AS(RatFunc::normalize(poly("n"), Poly()), ZeroDenominator);
}

TEST_CASE("normalize is scale invariant and keeps a primitive denominator") {
  const RatFunc f = RatFunc::normalize(poly("n-2"), poly("2n+8"));
  CHECK(f.den() == poly("n+4"));
  CHECK(f.num() == Poly(std::vector<BigRat>{BigRat(-1), BigRat(1, 2)}));
  CHECK(RatFunc::normalize(poly("n-2") * BigRat(-7, 3), poly("2n+8") * BigRat(-7, 3)) == f);
}

TEST_CASE("normalize agrees with pointwise division (randomized)") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 4), point(-20, 20);
  auto random_poly = [&] {
    std::vector<BigRat> c(deg(rng) + 1);
    for (auto& x : c) x = BigRat(coeff(rng), 1 + (coeff(rng) + 9) % 4);
    if (c.back().is_zero()) c.back() = 1;
    return Poly(c);
  };
  int checked = 0;
  while (checked < 100) {
    const Poly common = random_poly();
    const Poly p = random_poly() * common, d = random_poly() * common;
    const BigRat x(point(rng), 3);
    if (d.eval(x).is_zero()) continue;
    const RatFunc f = RatFunc::normalize(p, d);
    CHECK(f.eval(x) == p.eval(x) / d.eval(x));
    ++checked;
  }
}

TEST_CASE("evaluation and poles") {
  CHECK(rf("4 (n-2)/((n-1) n^3 (n+2)^3)").eval(3) == BigRat(2, 3375));
  CHECK(rf("(n-2)/(n-1)").eval(2) == BigRat(0));
  CHECK_THROWS_AS(rf("1/(n-1)").eval(1), PoleError);
}

TEST_CASE("rational function arithmetic") {
  const RatFunc a = rf("1/(n-1)"), b = rf("1/(n+1)");
  CHECK(a + b == rf("2n/((n-1)(n+1))"));
  CHECK(a - a == RatFunc());
  CHECK(a * b == rf("1/(n^2-1)"));
  CHECK(a / b == rf("(n+1)/(n-1)"));
  CHECK(a.pow(-2) == rf("(n-1)^2"));
  CHECK_THROWS_AS(RatFunc().inverse(), ZeroDenominator);
}

TEST_CASE("pochhammer_poly examples and splitting") {
  CHECK(pochhammer_poly(BigRat(-1), 2, BigRat(1, 2)) == poly("n^2/4 - n/2"));
  CHECK(pochhammer_poly(BigRat(5, 2), 0, BigRat(1)) == Poly(1));
  CHECK(pochhammer_poly(BigRat(-3), 3, BigRat(1)) == poly("(n-3)(n-2)(n-1)"));
  CHECK_THROWS(pochhammer_poly(BigRat(0), -1, BigRat(1)));
  for (const BigRat& a : {BigRat(1), BigRat(1, 2)})
    for (const BigRat& b : {BigRat(-3), BigRat(-1, 2), BigRat(2)})
      for (long k1 = 0; k1 <= 4; ++k1)
        for (long k2 = 0; k2 <= 4; ++k2)
          CHECK(pochhammer_poly(b, k1 + k2, a) == pochhammer_poly(b, k1, a) * pochhammer_poly(b + BigRat(k1), k2, a));
}

TEST_CASE("factor_for_display") {
  const Factorization f = factor_for_display(poly("(n-1)^2 (n+2)"));
  CHECK(f.content == BigRat(1));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<Poly, unsigned>{poly("n-1"), 2});
  CHECK(f.factors[1] == std::pair<Poly, unsigned>{poly("n+2"), 1});

  const Factorization g = factor_for_display(poly("n^2+4n-24"));
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0] == std::pair<Poly, unsigned>{poly("n^2+4n-24"), 1});

  const Factorization h = factor_for_display(poly("6n"));
  CHECK(h.content == BigRat(6));
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].first == poly("n"));

  for (const char* p : {"(2n-3)^3 (n+7) (n^2+1)/5", "-12 n^4 (3n+1)", "n^6+43n^5+400n^4-212n^3-6752n^2-5888n+15360", "7"})
    CHECK(factor_for_display(poly(p)).expand() == poly(p));
}

TEST_CASE("display strings round-trip through the parser") {
  for (const char* s : {"4 (n-2)/((n-1) n^3 (n+2)^3)", "-64 (n-2)(n^2+4n-24)/(3 (n-1)^5 (n+2)^3 (2n+5))",
                        "(n-2)(n-1)n/(n+2)", "0", "-5/7", "n^2/4-n/2"}) {
    const RatFunc f = rf(s);
    CHECK(parse_ratfunc(f.to_string()) == f);
  }
  CHECK(rf("4 (n-2)/((n-1) n^3 (n+2)^3)").to_string() == "4*(n-2)/((n-1)*n^3*(n+2)^3)");
  CHECK(rf("64 (n-2)(n^2+4n-24)/((n-1)^5 (n+2)^3 (n+4)^3)").to_latex() ==
        "\\frac{64\\,(n-2)\\,(n^{2}+4n-24)}{(n-1)^{5}\\,(n+2)^{3}\\,(n+4)^{3}}");
  CHECK_THROWS_AS(parse_ratfunc("n +"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("(n"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("1/(n-n)"), ZeroDenominator);
}

TEST_CASE("JSON wire forms") {
  CHECK(to_json(poly("3n^2-1/2")).dump() == R"(["-1/2","0","3"])");
  const RatFunc f = rf("4 (n-2)/((n-1) n^3 (n+2)^3)");
  const auto j = to_json(f);
  CHECK(j.at("factored") == f.to_string());
  CHECK(ratfunc_from_json(j) == f);
  CHECK(bigrat_from_json(to_json(BigRat(-6, 42875))) == BigRat(-6, 42875));
  const SqrtRational s(-1, BigRat(1, 15));
  CHECK(sqrt_rational_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(ratfunc_from_json(nlohmann::json::parse(R"({"num": ["1"]})")), ParseError);
  CHECK_THROWS_AS(ratfunc_from_json(nlohmann::json::parse(R"({"num": ["1"], "den": []})")), ZeroDenominator);
}

TEST_CASE("SqrtRational") {
  CHECK(SqrtRational(1, BigRat(1, 900)).exact() == BigRat(1, 30));
  CHECK_FALSE(SqrtRational(1, BigRat(1, 15)).exact().has_value());
  CHECK(SqrtRational(-1, BigRat(2)).to_string() == "-sqrt(2)");
  CHECK(SqrtRational(1, BigRat(0)).sign() == 0);
  CHECK_THROWS(SqrtRational(1, BigRat(-1)));
  CHECK((SqrtRational(-1, BigRat(2)) * SqrtRational(1, BigRat(8))).exact() == BigRat(-4));
}

} // TEST_SUITE
