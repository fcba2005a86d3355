#include <cmath>

#include "helpers.hpp"
#include "soncoup/coupling.hpp"
#include "soncoup/oracle.hpp"
#include "soncoup/reference_table.hpp"

using namespace soncoup;
using namespace soncoup::test;

namespace {

CouplingLabels L(int a, int b, int c, int d, int e, int f) { return CouplingLabels{{a, b, c, d, e, f}}; }

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("3j-symbol squares by integration") {
  CHECK(threej_squared_by_integration(Triad{0, 0, 0}, 5) == BigRat(1));
  CHECK(threej_squared_by_integration(Triad{1, 1, 0}, 4) == BigRat(1, 4));
  CHECK(threej_squared_by_integration(Triad{1, 1, 2}, 3) == BigRat(2, 15));
  CHECK(threej_squared_by_integration(Triad{1, 1, 1}, 6) == BigRat(0));
  CHECK(threej_squared_by_integration(Triad{1, 1, 4}, 6) == BigRat(0));
  CHECK_THROWS(threej_squared_by_integration(Triad{1, 1, 2}, 2));
}

TEST_CASE("G by integration") {
  CHECK(g_by_integration(0, 0, 0, 0, 3) == BigRat(1));
  CHECK(g_by_integration(2, 0, 0, 0, 5) == BigRat(0));
  CHECK(g_by_integration(2, 2, 0, 0, 5) == BigRat(18, 7));
}

TEST_CASE("Wigner and Racah closed forms") {
  CHECK(wigner_threej_squared(Triad{1, 1, 2}) == BigRat(2, 15));
  CHECK(wigner_threej_squared(Triad{1, 1, 1}) == BigRat(0));
  CHECK(racah_sixj(1, 1, 2, 1, 1, 2) == SqrtRational(1, BigRat(1, 900)));
  CHECK(racah_sixj(1, 1, 3, 1, 1, 1).sign() == 0);
  // {a b c; 0 c b} = (-1)^{a+b+c} / sqrt((2b+1)(2c+1))
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = std::abs(a - b); c <= a + b; ++c)
        CHECK(racah_sixj(a, b, c, 0, c, b) ==
              SqrtRational((a + b + c) % 2 == 0 ? 1 : -1, BigRat(1, (2 * b + 1) * (2 * c + 1))));
}

TEST_CASE("Wigner closed form matches the n = 3 3j-symbol squares") {
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      for (int c = 0; c <= 10; ++c)
        CHECK(wigner_threej_squared(Triad{a, b, c}) == num(threej_squared(Triad{a, b, c}, 0, Mode::fixed(3))));
}

TEST_CASE("I_3 from Racah's 6j-symbol") {
  CHECK(i_by_racah_n3(L(1, 1, 2, 1, 1, 2)) == BigRat(2, 3375));
  CHECK(i_by_racah_n3(L(2, 2, 2, 2, 2, 2)) == BigRat(-6, 42875));
  CHECK(i_by_racah_n3(L(0, 0, 0, 0, 0, 0)) == BigRat(1));
  CHECK(i_by_racah_n3(L(1, 1, 1, 1, 1, 1)) == BigRat(0));
}

TEST_CASE("signed 6j-symbols at n = 3 match Racah's") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (int e = 0; e <= 3; ++e)
            for (int f = 0; f <= 3; ++f) {
              const CouplingLabels labels = L(a, b, c, d, e, f);
              if (!labels.admissible()) continue;
              CHECK(sixj(labels, 3) == racah_sixj(a, b, c, d, e, f));
            }
}

TEST_CASE("quadrature at n = 3") {
  const auto near = [](const CouplingLabels& c, double want) {
    const QuadratureResult r = i_by_quadrature_n3(c);
    CHECK(std::abs(r.value - want) < 1e-12);
    CHECK(r.error_bound < 1e-12);
  };
  near(L(1, 1, 2, 1, 1, 2), 2.0 / 3375);
  near(L(1, 1, 1, 1, 1, 1), 0.0);
  near(L(1, 1, 2, 2, 2, 1), 2.0 / 1125);
  CHECK(i_by_quadrature_n3(L(2, 2, 2, 2, 2, 2)).points == 5);
  CHECK_THROWS_AS(i_by_quadrature_n3(L(2, 2, 2, 2, 2, 2), QuadratureSpec{2}), ResolutionTooLow);
  const QuadratureResult low = i_by_quadrature_n3(L(2, 2, 2, 2, 2, 2), QuadratureSpec{3});
  CHECK(std::isfinite(low.value));
}

} // TEST_SUITE
