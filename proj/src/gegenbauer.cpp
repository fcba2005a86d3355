#include "soncoup/gegenbauer.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace soncoup {

namespace {

const BigRat kHalf(1, 2);

std::vector<BigRat> build_gegenbauer(int j, const BigRat& lambda) {
  // (k+1) C_{k+1} = 2 (k + lambda) x C_k - (k + 2 lambda - 1) C_{k-1}
  std::vector<BigRat> prev{BigRat(1)};
  if (j == 0) return prev;
  std::vector<BigRat> cur{BigRat(0), BigRat(2) * lambda};
  for (int k = 1; k < j; ++k) {
    std::vector<BigRat> next(static_cast<std::size_t>(k) + 2);
    const BigRat up = BigRat(2) * (BigRat(k) + lambda);
    const BigRat down = BigRat(k) + BigRat(2) * lambda - BigRat(1);
    const BigRat inv = BigRat(1, k + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += up * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= down * prev[i];
    for (auto& c : next) c *= inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct GegenbauerCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, BigRat>, std::vector<BigRat>> table;
};

GegenbauerCache& cache() {
  static GegenbauerCache c;
  return c;
}

} // namespace

BigRat GegenbauerPoly::eval(const BigRat& x) const {
  BigRat acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GegenbauerPoly gegenbauer_coeffs(int j, const BigRat& lambda) {
  GegenbauerPoly out{j, lambda, {}};
  if (j < 0) return out;
  auto& c = cache();
  const auto key = std::make_pair(j, lambda);
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.table.find(key); it != c.table.end()) {
      out.coeffs = it->second;
      return out;
    }
  }
  out.coeffs = build_gegenbauer(j, lambda);
  std::unique_lock lock(c.mutex);
  c.table.try_emplace(key, out.coeffs);
  return out;
}

GammaProduct addition_coeff_a_gamma(int l, int m) {
  if (m < 0 || m > l) throw std::invalid_argument("addition_coeff_a requires 0 <= m <= l");
  // 2^{2m} (n-4)! (l-m)! Gamma^2(m+n/2-1) (2m+n-3) / ((l+m+n-3)! Gamma^2(n/2-1))
  const RatFunc pre = RatFunc(BigRat(4).pow(m) * BigRat::factorial(l - m)) *
                      RatFunc(Poly::linear(BigRat(1), BigRat(2 * m - 3)));
  GammaProduct g(pre);
  g *= GammaProduct::gamma(BigRat(1), BigRat(-3), 1);
  g *= GammaProduct::gamma(BigRat(1), BigRat(l + m - 2), -1);
  g *= GammaProduct::gamma(kHalf, BigRat(m - 1), 2);
  g *= GammaProduct::gamma(kHalf, BigRat(-1), -2);
  return g;
}

RatFunc addition_coeff_a(int l, int m) { return gp_reduce(addition_coeff_a_gamma(l, m)); }

CouplingValue addition_coeff_a(int l, int m, const Mode& mode) {
  RatFunc f = addition_coeff_a(l, m);
  if (mode.is_symbolic()) return f;
  return f.eval(BigRat(mode.n()));
}

GammaProduct reduction_coeff_b_gamma(int j, int k, int m) {
  if (k < 0 || k > m || 2 * k > j) throw std::invalid_argument("reduction_coeff_b requires 0 <= k <= min(m, j/2)");
  // m! Gamma(m+(n-2)/2) Gamma(j-k+(n-2)/2) (j+m-2k+(n-2)/2)
  //   / (k! (m-k)! Gamma((n-2)/2) Gamma(j+m-k+n/2))
  const RatFunc pre = RatFunc(BigRat::factorial(m) / (BigRat::factorial(k) * BigRat::factorial(m - k))) *
                      RatFunc(Poly::linear(kHalf, BigRat(j + m - 2 * k - 1)));
  GammaProduct g(pre);
  g *= GammaProduct::gamma(kHalf, BigRat(m - 1), 1);
  g *= GammaProduct::gamma(kHalf, BigRat(j - k - 1), 1);
  g *= GammaProduct::gamma(kHalf, BigRat(-1), -1);
  g *= GammaProduct::gamma(kHalf, BigRat(j + m - k), -1);
  return g;
}

RatFunc reduction_coeff_b(int j, int k, int m) { return gp_reduce(reduction_coeff_b_gamma(j, k, m)); }

CouplingValue reduction_coeff_b(int j, int k, int m, const Mode& mode) {
  RatFunc f = reduction_coeff_b(j, k, m);
  if (mode.is_symbolic()) return f;
  return f.eval(BigRat(mode.n()));
}

namespace {

// Gamma(x) for integer or half-integer x > 0, as coeff * sqrt(pi)^power.
struct SqrtPiValue {
  BigRat coeff;
  int sqrt_pi = 0;
};

SqrtPiValue gamma_value(const BigRat& x) {
  if (x.sign() <= 0 && x.is_integer()) throw PoleError("gamma at a non-positive integer");
  if (x.is_integer()) return {BigRat::factorial(x.num().get_si() - 1), 0};
  // Gamma(k + 1/2) = (2k-1)!! / 2^k sqrt(pi), extended downward by Gamma(x) = Gamma(x+1)/x.
  long k = x.floor().get_si();
  BigRat c(1);
  BigRat arg = kHalf;
  if (k >= 0) {
    for (long i = 0; i < k; ++i) {
      c *= arg;
      arg += BigRat(1);
    }
  } else {
    for (long i = 0; i < -k; ++i) {
      arg -= BigRat(1);
      c /= arg;
    }
  }
  return {c, 1};
}

} // namespace

PiRational weight_integral(int xpow, const BigRat& p) {
  if (xpow < 0) throw std::invalid_argument("weight_integral: negative power of x");
  if (!(p.is_integer() || p.den() == 2) || p <= BigRat(-1))
    throw std::invalid_argument("weight_integral: p must be an integer or half-integer > -1");
  const int pi_power = p.is_integer() ? 0 : 1;
  if (xpow % 2 != 0) return {BigRat(0), pi_power};
  // Beta(r + 1/2, p + 1) with r = xpow / 2
  const BigRat r(xpow / 2);
  const SqrtPiValue g1 = gamma_value(r + kHalf);
  const SqrtPiValue g2 = gamma_value(p + BigRat(1));
  const SqrtPiValue g3 = gamma_value(r + p + BigRat(3, 2));
  const int sqrt_pi = g1.sqrt_pi + g2.sqrt_pi - g3.sqrt_pi;
  return {g1.coeff * g2.coeff / g3.coeff, sqrt_pi / 2};
}

PiRational triple_product_integral_exact(int j1, int j2, int j3, int m, long n) {
  if (n < 3) throw std::invalid_argument("triple_product_integral_exact requires n >= 3");
  const BigRat p = BigRat(m) + BigRat(n - 3, 2);
  const int pi_power = p.is_integer() ? 0 : 1;
  if (j1 < 0 || j2 < m || j3 < m) return {BigRat(0), pi_power};
  const BigRat base = BigRat(n, 2) - BigRat(1);
  const auto c1 = gegenbauer_coeffs(j1, base).coeffs;
  const auto c2 = gegenbauer_coeffs(j2 - m, base + BigRat(m)).coeffs;
  const auto c3 = gegenbauer_coeffs(j3 - m, base + BigRat(m)).coeffs;
  const Poly prod = Poly(c1) * Poly(c2) * Poly(c3);
  BigRat sum;
  for (std::size_t k = 0; k < prod.coeffs().size(); k += 2) {
    if (prod.coeffs()[k].is_zero()) continue;
    sum += prod.coeffs()[k] * weight_integral(static_cast<int>(k), p).coeff;
  }
  return {sum, pi_power};
}

} // namespace soncoup
