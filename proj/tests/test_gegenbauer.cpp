#include "helpers.hpp"
#include "soncoup/gegenbauer.hpp"

using namespace soncoup;
using namespace soncoup::test;

namespace {

std::vector<BigRat> coeffs(std::initializer_list<BigRat> c) { return c; }

Poly as_poly(const GegenbauerPoly& g) { return Poly(g.coeffs); }

} // namespace

TEST_SUITE("gegenbauer") {

TEST_CASE("coefficient examples") {
  CHECK(gegenbauer_coeffs(0, BigRat(7, 2)).coeffs == coeffs({1}));
  CHECK(gegenbauer_coeffs(1, BigRat(1, 2)).coeffs == coeffs({0, 1}));
  CHECK(gegenbauer_coeffs(2, BigRat(1, 2)).coeffs == coeffs({BigRat(-1, 2), 0, BigRat(3, 2)}));
  CHECK(gegenbauer_coeffs(-1, BigRat(1)).coeffs.empty());
  // Chebyshev U_3 = 8x^3 - 4x
  CHECK(gegenbauer_coeffs(3, BigRat(1)).coeffs == coeffs({0, -4, 0, 8}));
}

TEST_CASE("parity and value at 1") {
  for (int j = 0; j <= 10; ++j)
    for (const BigRat& lambda : {BigRat(1, 2), BigRat(1), BigRat(5, 2), BigRat(4)}) {
      const auto g = gegenbauer_coeffs(j, lambda);
      for (std::size_t k = 0; k < g.coeffs.size(); ++k)
        if ((static_cast<int>(k) - j) % 2 != 0) CHECK(g.coeffs[k].is_zero());
      // C_j^lambda(1) = (2 lambda)_j / j!
      BigRat want(1);
      for (int i = 0; i < j; ++i) want *= (BigRat(2) * lambda + BigRat(i)) / BigRat(i + 1);
      CHECK(g.eval(BigRat(1)) == want);
    }
}

TEST_CASE("addition coefficient examples") {
  CHECK(addition_coeff_a(0, 0) == RatFunc(1));
  CHECK(addition_coeff_a(1, 0) == rf("1/(n-2)"));
  CHECK(addition_coeff_a(1, 1) == rf("(n-2)/(n-3)"));
  CHECK(std::get<BigRat>(addition_coeff_a(1, 1, Mode::fixed(7))) == BigRat(5, 4));
  CHECK_THROWS(addition_coeff_a(1, 2));
}

TEST_CASE("reduction coefficient examples") {
  for (int j = 0; j <= 6; ++j) {
    CHECK(reduction_coeff_b(j, 0, 0) == RatFunc(1));
    const RatFunc want = RatFunc::normalize(Poly::linear(BigRat(1), BigRat(-2)), Poly::linear(BigRat(1), BigRat(2 * j - 2)));
    CHECK(reduction_coeff_b(j, 0, 1) == want);
    if (j >= 2) CHECK(reduction_coeff_b(j, 1, 1) == want);
  }
  CHECK_THROWS(reduction_coeff_b(1, 1, 1));
}

TEST_CASE("degree reduction identity holds exactly") {
  for (long n : {3L, 5L, 6L, 8L}) {
    const BigRat lambda = BigRat(n, 2) - BigRat(1);
    for (int j = 0; j <= 8; ++j)
      for (int m = 0; m <= 4; ++m) {
        Poly rhs;
        for (int k = 0; k <= std::min(m, j / 2); ++k) {
          const BigRat b = std::get<BigRat>(reduction_coeff_b(j, k, m, Mode::fixed(n)));
          const Poly term = as_poly(gegenbauer_coeffs(j - 2 * k, lambda + BigRat(m))) * b;
          rhs = (k % 2 == 0) ? rhs + term : rhs - term;
        }
        CAPTURE(n);
        CAPTURE(j);
        CAPTURE(m);
        CHECK(rhs == as_poly(gegenbauer_coeffs(j, lambda)));
      }
  }
}

TEST_CASE("addition theorem at rational points") {
  // Points on the unit circle with rational coordinates: (cos, sin).
  const std::pair<BigRat, BigRat> points[] = {
      {BigRat(3, 5), BigRat(4, 5)}, {BigRat(5, 13), BigRat(12, 13)}, {BigRat(-8, 17), BigRat(15, 17)}};
  const BigRat ts[] = {BigRat(0), BigRat(1, 3), BigRat(-2, 7), BigRat(1)};
  for (long n = 4; n <= 7; ++n) {
    const BigRat lambda = BigRat(n, 2) - BigRat(1);
    for (int l = 0; l <= 3; ++l)
      for (const auto& [xi, si] : points)
        for (const auto& [xj, sj] : points)
          for (const BigRat& t : ts) {
            const BigRat lhs = gegenbauer_coeffs(l, lambda).eval(xi * xj + si * sj * t);
            BigRat rhs;
            for (int m = 0; m <= l; ++m) {
              const BigRat a = std::get<BigRat>(addition_coeff_a(l, m, Mode::fixed(n)));
              const auto raised = gegenbauer_coeffs(l - m, lambda + BigRat(m));
              rhs += a * (si * sj).pow(m) * raised.eval(xi) * raised.eval(xj) *
                     gegenbauer_coeffs(m, lambda - BigRat(1, 2)).eval(t);
            }
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("weight integral examples") {
  CHECK(weight_integral(1, BigRat(3)) == PiRational{BigRat(0), 0});
  CHECK(weight_integral(0, BigRat(1)) == PiRational{BigRat(4, 3), 0});
  CHECK(weight_integral(0, BigRat(1, 2)) == PiRational{BigRat(1, 2), 1});
  CHECK(weight_integral(2, BigRat(0)) == PiRational{BigRat(2, 3), 0});
  CHECK(weight_integral(0, BigRat(-1, 2)) == PiRational{BigRat(1), 1});
  CHECK_THROWS(weight_integral(0, BigRat(-1)));
  CHECK_THROWS(weight_integral(0, BigRat(1, 3)));
}

TEST_CASE("triple product integral") {
  CHECK(triple_product_integral_exact(0, 0, 0, 0, 3) == PiRational{BigRat(2), 0});
  CHECK(triple_product_integral_exact(1, 0, 0, 0, 3).coeff == BigRat(0));
  // weight (1-x^2)^1 at n = 5: W = 4/3 times (n-2)^2 (n-1)/(2(n+2)) = 18/7
  CHECK(triple_product_integral_exact(2, 2, 0, 0, 5) == PiRational{BigRat(24, 7), 0});
  CHECK(triple_product_integral_exact(2, 2, 0, 0, 4).pi_power == 1);
  CHECK(triple_product_integral_exact(1, 0, 3, 1, 5).coeff == BigRat(0)); // j2 < m
  CHECK_THROWS(triple_product_integral_exact(0, 0, 0, 0, 2));
  for (long n : {3L, 4L, 5L, 6L})
    for (int j1 = 0; j1 <= 5; ++j1)
      for (int j2 = 0; j2 <= 5; ++j2)
        for (int j3 = 0; j3 <= 5; ++j3)
          for (int m = 0; m <= 2; ++m) {
            const PiRational v = triple_product_integral_exact(j1, j2, j3, m, n);
            CHECK(v.pi_power == (n % 2 == 0 ? 1 : 0));
            if ((j1 + j2 + j3) % 2 != 0) CHECK(v.coeff.is_zero());
            CHECK(v == triple_product_integral_exact(j1, j3, j2, m, n));
          }
}

} // TEST_SUITE
