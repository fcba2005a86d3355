#include "soncoup/coupling.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <tuple>

#include "memo.hpp"
#include "soncoup/gegenbauer.hpp"

namespace soncoup {

namespace {

const BigRat kHalf(1, 2);

void check_mode(const Mode& mode) {
  if (!mode.is_symbolic() && mode.n() < 1) throw std::invalid_argument("fixed n must be a positive integer");
}

bool use_direct(const Mode& mode) { return !mode.is_symbolic() && mode.n() >= kDirectPathMinN; }

CouplingValue zero_value(const Mode& mode) {
  if (mode.is_symbolic()) return RatFunc();
  return BigRat(0);
}

CouplingValue from_symbolic(const RatFunc& f, const Mode& mode) {
  if (mode.is_symbolic()) return f;
  return f.eval(BigRat(mode.n()));
}

RatFunc as_ratfunc(const CouplingValue& v) { return std::get<RatFunc>(v); }

// Gamma(n + b)
GammaProduct g_n(long b, int e = 1) { return GammaProduct::gamma(BigRat(1), BigRat(b), e); }
// Gamma(n/2 + b)
GammaProduct g_half(const BigRat& b, int e = 1) { return GammaProduct::gamma(kHalf, b, e); }

Triad sorted(Triad t) {
  std::array<int, 3> v{t.l1, t.l2, t.l3};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

using TriadKey = std::tuple<int, int, int, int>;        // sorted labels, shift
using GKey = std::tuple<int, int, int, int>;            // j1, min(j2,j3), max(j2,j3), m
using FixedTriadKey = std::tuple<int, int, int, int, long>;
using FixedGKey = std::tuple<int, int, int, int, long>;

detail::Memo<TriadKey, RatFunc>& threej_cache() {
  static detail::Memo<TriadKey, RatFunc> m;
  return m;
}
detail::Memo<FixedTriadKey, BigRat>& threej_fixed_cache() {
  static detail::Memo<FixedTriadKey, BigRat> m;
  return m;
}
detail::Memo<GKey, RatFunc>& g_cache() {
  static detail::Memo<GKey, RatFunc> m;
  return m;
}
detail::Memo<FixedGKey, BigRat>& g_fixed_cache() {
  static detail::Memo<FixedGKey, BigRat> m;
  return m;
}
detail::Memo<int, RatFunc>& dim_cache() {
  static detail::Memo<int, RatFunc> m;
  return m;
}

// One term of the single sum for G_n: (-1)^k b(n,j1,k,m) times the
// factorial ratios times the 3j-symbol square of SO(n+2m).
GammaProduct g_term_gamma(int j1, int j2, int j3, int m, int k) {
  const int a = j1 - 2 * k, b = j2 - m, c = j3 - m;
  GammaProduct g = reduction_coeff_b_gamma(j1, k, m);
  const BigRat sign = (k % 2 == 0) ? BigRat(1) : BigRat(-1);
  g *= RatFunc(sign / (BigRat::factorial(a) * BigRat::factorial(b) * BigRat::factorial(c)));
  // (a+2m+n-3)! (j2+m+n-3)! (j3+m+n-3)! / (2m+n-3)!^3
  g *= g_n(a + 2 * m - 2);
  g *= g_n(j2 + m - 2);
  g *= g_n(j3 + m - 2);
  g *= g_n(2 * m - 2, -3);
  g *= threej_squared_gamma(Triad{a, b, c}, 2 * m);
  return g;
}

bool g_is_zero(int j1, int j2, int j3, int m) {
  return j1 < 0 || m < 0 || j2 < m || j3 < m || (j1 + j2 + j3) % 2 != 0;
}

RatFunc g_symbolic(int j1, int j2, int j3, int m) {
  if (g_is_zero(j1, j2, j3, m)) return RatFunc();
  return g_cache().get(GKey{j1, std::min(j2, j3), std::max(j2, j3), m}, [&] {
    RatFunc sum;
    for (int k = 0; k <= std::min(m, j1 / 2); ++k) {
      if (!selection_ok(Triad{j1 - 2 * k, j2 - m, j3 - m})) continue;
      sum += gp_reduce(g_term_gamma(j1, j2, j3, m, k));
    }
    return sum;
  });
}

BigRat g_direct(int j1, int j2, int j3, int m, long n) {
  if (g_is_zero(j1, j2, j3, m)) return BigRat(0);
  return g_fixed_cache().get(FixedGKey{j1, std::min(j2, j3), std::max(j2, j3), m, n}, [&] {
    BigRat sum;
    for (int k = 0; k <= std::min(m, j1 / 2); ++k) {
      if (!selection_ok(Triad{j1 - 2 * k, j2 - m, j3 - m})) continue;
      sum += gp_evaluate(g_term_gamma(j1, j2, j3, m, k), n);
    }
    return sum;
  });
}

// prod_i l_i! (n-3)! / (l_i+n-3)!
GammaProduct normalization_gamma(const CouplingLabels& labels) {
  GammaProduct g;
  BigRat c(1);
  for (int l : labels.l) {
    c *= BigRat::factorial(l);
    g *= g_n(-2);
    g *= g_n(l - 2, -1);
  }
  return g * RatFunc(c);
}

// Per-m weight of the master sum, without the three G factors:
// (m+n-4)!/(m!(n-4)!) ((n-3)/(2m+n-3))^2 a(n,l4,m) a(n,l5,m) a(n,l6,m) P(n,m)^3,
// where P(n,m) = ((n-1)/2)_m / (n/2)_m combines the sphere-measure prefactor
// with the prefactor of the single-sum formula for G_n.
GammaProduct m_weight_gamma(const CouplingLabels& labels, int m) {
  const RatFunc ratio = RatFunc::normalize(Poly::linear(BigRat(1), BigRat(-3)),
                                           Poly::linear(BigRat(1), BigRat(2 * m - 3)));
  GammaProduct g(ratio.pow(2) * RatFunc(BigRat(1) / BigRat::factorial(m)));
  g *= g_n(m - 3);
  g *= g_n(-3, -1);
  for (int i = 3; i < 6; ++i) g *= addition_coeff_a_gamma(labels.l[i], m);
  GammaProduct p = g_half(BigRat(m) - kHalf) * g_half(-kHalf, -1) * g_half(BigRat(0)) * g_half(BigRat(m), -1);
  g *= p.pow(3);
  return g;
}

int min_lower(const CouplingLabels& labels) { return std::min({labels.l[3], labels.l[4], labels.l[5]}); }

RatFunc i_alpha_symbolic(const CouplingLabels& labels) {
  const auto& l = labels.l;
  RatFunc sum;
  for (int m = 0; m <= min_lower(labels); ++m) {
    const RatFunc g1 = g_symbolic(l[0], l[4], l[5], m);
    if (g1.is_zero()) continue;
    const RatFunc g2 = g_symbolic(l[1], l[3], l[5], m);
    if (g2.is_zero()) continue;
    const RatFunc g3 = g_symbolic(l[2], l[3], l[4], m);
    if (g3.is_zero()) continue;
    sum += gp_reduce(m_weight_gamma(labels, m)) * g1 * g2 * g3;
  }
  if (sum.is_zero()) return sum;
  return gp_reduce(normalization_gamma(labels)) * sum;
}

BigRat i_alpha_direct(const CouplingLabels& labels, long n) {
  const auto& l = labels.l;
  BigRat sum;
  for (int m = 0; m <= min_lower(labels); ++m) {
    const BigRat g1 = g_direct(l[0], l[4], l[5], m, n);
    if (g1.is_zero()) continue;
    const BigRat g2 = g_direct(l[1], l[3], l[5], m, n);
    if (g2.is_zero()) continue;
    const BigRat g3 = g_direct(l[2], l[3], l[4], m, n);
    if (g3.is_zero()) continue;
    sum += gp_evaluate(m_weight_gamma(labels, m), n) * g1 * g2 * g3;
  }
  if (sum.is_zero()) return sum;
  return gp_evaluate(normalization_gamma(labels), n) * sum;
}

} // namespace

CouplingValue dim(int l, const Mode& mode) {
  check_mode(mode);
  if (l < 0) throw std::invalid_argument("dim: negative label");
  const RatFunc f = dim_cache().get(l, [l] {
    // (2l+n-2) Gamma(l+n-2) / (l! Gamma(n-1))
    GammaProduct g(RatFunc(Poly::linear(BigRat(1), BigRat(2 * l - 2))) * RatFunc(BigRat(1) / BigRat::factorial(l)));
    g *= g_n(l - 2);
    g *= g_n(-1, -1);
    return gp_reduce(g);
  });
  return from_symbolic(f, mode);
}

GammaProduct threej_squared_gamma(const Triad& t, int shift) {
  if (shift < 0 || shift % 2 != 0) throw std::invalid_argument("threej_squared: shift must be even and >= 0");
  if (!selection_ok(t)) throw std::invalid_argument("threej_squared_gamma: triad fails the selection rules");
  // With N = n + shift:
  // (J+N-3)! / ((N-3)! Gamma^2(N/2) Gamma(J+N/2))
  //   * prod_i (N-2)! l_i! Gamma(J-l_i+(N-2)/2) / (2 (l_i+N-3)! (J-l_i)!)
  const int J = t.perimeter() / 2;
  const int s = shift;
  const BigRat hs(s / 2);
  BigRat c(1, 8);
  GammaProduct g;
  g *= g_n(J + s - 2);
  g *= g_n(s - 2, -1);
  g *= g_half(hs, -2);
  g *= g_half(hs + BigRat(J), -1);
  for (int l : {t.l1, t.l2, t.l3}) {
    c *= BigRat::factorial(l) / BigRat::factorial(J - l);
    g *= g_n(s - 1);
    g *= g_half(hs + BigRat(J - l - 1));
    g *= g_n(l + s - 2, -1);
  }
  return g * RatFunc(c);
}

CouplingValue threej_squared(const Triad& t, int shift, const Mode& mode) {
  check_mode(mode);
  if (shift < 0 || shift % 2 != 0) throw std::invalid_argument("threej_squared: shift must be even and >= 0");
  if (!mode.is_symbolic() && mode.n() + shift < 2) throw std::invalid_argument("threej_squared: n + shift must be >= 2");
  if (!selection_ok(t)) return zero_value(mode);
  const Triad st = sorted(t);
  if (use_direct(mode)) {
    const long n = mode.n();
    return threej_fixed_cache().get(FixedTriadKey{st.l1, st.l2, st.l3, shift, n},
                                    [&] { return gp_evaluate(threej_squared_gamma(st, shift), n); });
  }
  const RatFunc f = threej_cache().get(TriadKey{st.l1, st.l2, st.l3, shift},
                                       [&] { return gp_reduce(threej_squared_gamma(st, shift)); });
  return from_symbolic(f, mode);
}

CouplingValue g_reduced(int j1, int j2, int j3, int m, const Mode& mode) {
  check_mode(mode);
  if (use_direct(mode)) return g_direct(j1, j2, j3, m, mode.n());
  return from_symbolic(g_symbolic(j1, j2, j3, m), mode);
}

CouplingValue i_alpha(const CouplingLabels& labels, const Mode& mode) {
  check_mode(mode);
  for (int l : labels.l)
    if (l < 0) throw std::invalid_argument("i_alpha: negative label");
  if (!labels.admissible()) return zero_value(mode);
  if (use_direct(mode)) return i_alpha_direct(labels, mode.n());
  return from_symbolic(i_alpha_symbolic(labels), mode);
}

SqrtRational sixj(const CouplingLabels& labels, long n) {
  const Mode mode = Mode::fixed(n);
  if (!labels.admissible())
    throw UndefinedBySelectionRules("6j-symbol " + labels.to_string() + " is not determined: a triad fails the selection rules");
  const BigRat i = std::get<BigRat>(i_alpha(labels, mode));
  const auto& l = labels.l;
  int sign = ((l[3] + l[4] + l[5]) % 2 == 0) ? 1 : -1;
  BigRat denom(1);
  for (const Triad& t : labels.triads()) {
    const BigRat t2 = std::get<BigRat>(threej_squared(t, 0, mode));
    if (t2.is_zero())
      throw UndefinedBySelectionRules("3j-symbol vanishes at n = " + std::to_string(n) + " for " + labels.to_string());
    if ((t.perimeter() / 2) % 2 != 0) sign = -sign;
    denom *= t2;
  }
  return SqrtRational(sign * i.sign(), i * i / denom);
}

CouplingValue sixj_squared(const CouplingLabels& labels, const Mode& mode) {
  check_mode(mode);
  if (!labels.admissible())
    throw UndefinedBySelectionRules("6j-symbol " + labels.to_string() + " is not determined: a triad fails the selection rules");
  if (!mode.is_symbolic()) return sixj(labels, mode.n()).square();
  const RatFunc i = as_ratfunc(i_alpha(labels, mode));
  RatFunc denom(1);
  for (const Triad& t : labels.triads()) denom *= as_ratfunc(threej_squared(t, 0, mode));
  return i * i / denom;
}

CouplingValue c_alpha(const CouplingLabels& labels, const Mode& mode) {
  check_mode(mode);
  const CouplingValue i = i_alpha(labels, mode);
  if (mode.is_symbolic()) {
    if (is_zero(i)) return RatFunc();
    RatFunc d(1);
    for (int l : labels.l) d *= as_ratfunc(dim(l, mode));
    return d * as_ratfunc(i);
  }
  BigRat v = std::get<BigRat>(i);
  if (v.is_zero()) return v;
  for (int l : labels.l) v *= std::get<BigRat>(dim(l, mode));
  return v;
}

std::vector<CouplingLabels> symmetry_orbit(const CouplingLabels& labels) {
  // Generators: cyclic column shift, exchange of columns 1 and 2, and the
  // upper/lower exchange in columns 2 and 3.
  auto cyclic = [](const CouplingLabels& x) {
    const auto& l = x.l;
    return CouplingLabels{{l[1], l[2], l[0], l[4], l[5], l[3]}};
  };
  auto swap12 = [](const CouplingLabels& x) {
    const auto& l = x.l;
    return CouplingLabels{{l[1], l[0], l[2], l[4], l[3], l[5]}};
  };
  auto flip23 = [](const CouplingLabels& x) {
    const auto& l = x.l;
    return CouplingLabels{{l[0], l[4], l[5], l[3], l[1], l[2]}};
  };
  std::set<CouplingLabels> seen{labels};
  std::vector<CouplingLabels> frontier{labels};
  while (!frontier.empty()) {
    const CouplingLabels x = frontier.back();
    frontier.pop_back();
    for (const CouplingLabels& y : {cyclic(x), swap12(x), flip23(x)})
      if (seen.insert(y).second) frontier.push_back(y);
  }
  return {seen.begin(), seen.end()};
}

CouplingLabels canonical_representative(const CouplingLabels& labels) { return symmetry_orbit(labels).front(); }

} // namespace soncoup
