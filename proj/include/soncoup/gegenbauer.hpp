#pragma once

// Exact Gegenbauer machinery: coefficient lists at rational order, the
// addition-theorem and degree-reduction coefficients as functions of n, and
// exact weighted integrals on [-1, 1].

#include <vector>

#include "soncoup/exact.hpp"
#include "soncoup/gamma_product.hpp"
#include "soncoup/value.hpp"

namespace soncoup {

/// C_j^lambda(x) as coefficients in x, ascending. Negative degree gives the
/// zero polynomial (empty coefficient list).
struct GegenbauerPoly {
  int degree = 0;
  BigRat order;
  std::vector<BigRat> coeffs;

  BigRat eval(const BigRat& x) const;
};

/// Built by the three-term recurrence and memoized; safe to call from
/// several threads.
GegenbauerPoly gegenbauer_coeffs(int j, const BigRat& lambda);

/// a(n, l, m): the coefficient of the m-th term in the addition theorem for
/// C_l^{n/2-1}(e_i . e_j). Requires 0 <= m <= l.
GammaProduct addition_coeff_a_gamma(int l, int m);
RatFunc addition_coeff_a(int l, int m);
CouplingValue addition_coeff_a(int l, int m, const Mode& mode);

/// b(n, j, k, m): coefficient of (-1)^k C_{j-2k}^{m+n/2-1} when
/// C_j^{n/2-1} is rewritten at order raised by m. Requires
/// 0 <= k <= min(m, j/2).
GammaProduct reduction_coeff_b_gamma(int j, int k, int m);
RatFunc reduction_coeff_b(int j, int k, int m);
CouplingValue reduction_coeff_b(int j, int k, int m, const Mode& mode);

/// Integral of x^xpow (1 - x^2)^p over [-1, 1], p an integer or
/// half-integer greater than -1. Pi appears (to the first power) exactly
/// when p is a half-integer.
PiRational weight_integral(int xpow, const BigRat& p);

/// Integral over [0, pi] of sin^{2m+n-2}(t) C_{j1}^{n/2-1}(cos t)
/// C_{j2-m}^{m+n/2-1}(cos t) C_{j3-m}^{m+n/2-1}(cos t), by term-by-term
/// exact integration. Zero when j2 < m or j3 < m. Requires n >= 3.
PiRational triple_product_integral_exact(int j1, int j2, int j3, int m, long n);

} // namespace soncoup
