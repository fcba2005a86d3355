#include "soncoup/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "soncoup/gegenbauer.hpp"

namespace soncoup {

namespace {

BigRat fact(long k) { return BigRat::factorial(k); }

void require_sphere(long n) {
  if (n < 3) throw std::invalid_argument("oracle integration requires n >= 3");
}

bool triangle(int a, int b, int c) {
  return a >= 0 && b >= 0 && c >= 0 && std::abs(a - b) <= c && c <= a + b;
}

// (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!
BigRat triangle_coeff(int a, int b, int c) {
  return fact(a + b - c) * fact(a - b + c) * fact(-a + b + c) / fact(a + b + c + 1);
}

// Integral over [-1, 1] of the product of the given polynomials against
// (1 - x^2)^p, as a coefficient of pi^{p half-integer ? 1 : 0}.
BigRat weighted_product_integral(const Poly& prod, const BigRat& p) {
  BigRat sum;
  const auto& c = prod.coeffs();
  for (std::size_t k = 0; k < c.size(); k += 2) {
    if (c[k].is_zero()) continue;
    sum += c[k] * weight_integral(static_cast<int>(k), p).coeff;
  }
  return sum;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
    abs_ += std::abs(x);
  }
  double value() const { return sum_ + comp_; }
  double abs_total() const { return abs_; }

private:
  double sum_ = 0.0, comp_ = 0.0, abs_ = 0.0;
};

// P_0(x) .. P_lmax(x) by the three-term recurrence.
void legendre_all(int lmax, double x, double* out) {
  out[0] = 1.0;
  if (lmax >= 1) out[1] = x;
  for (int l = 1; l < lmax; ++l) out[l + 1] = ((2 * l + 1) * x * out[l] - l * out[l - 1]) / (l + 1);
}

double legendre(int l, double x) {
  double p0 = 1.0, p1 = x;
  if (l == 0) return p0;
  for (int k = 1; k < l; ++k) {
    const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

struct GaussRule {
  std::vector<double> nodes, weights;
};

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration from the
// Chebyshev-like initial guesses.
GaussRule gauss_legendre(int count) {
  GaussRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double p = legendre(count, x);
      const double pm = legendre(count - 1, x);
      dp = count * (x * p - pm) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double p = legendre(count, x), pm = legendre(count - 1, x);
    dp = count * (x * p - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.nodes[count - 1 - i] = -x;
    rule.weights[i] = rule.weights[count - 1 - i] = w;
  }
  return rule;
}

} // namespace

BigRat threej_squared_by_integration(const Triad& t, long n) {
  require_sphere(n);
  if (t.l1 < 0 || t.l2 < 0 || t.l3 < 0) throw std::invalid_argument("negative label");
  const BigRat lambda = BigRat(n, 2) - BigRat(1);
  const BigRat p(n - 3, 2);
  Poly prod(1);
  BigRat norm(1);
  for (int l : {t.l1, t.l2, t.l3}) {
    prod *= Poly(gegenbauer_coeffs(l, lambda).coeffs);
    // 1 / C_l(1) = l! (n-3)! / (l+n-3)!
    norm *= fact(l) * fact(n - 3) / fact(l + n - 3);
  }
  return norm * weighted_product_integral(prod, p) / weight_integral(0, p).coeff;
}

BigRat g_by_integration(int j1, int j2, int j3, int m, long n) {
  require_sphere(n);
  if (m < 0) throw std::invalid_argument("negative m");
  const BigRat p = BigRat(m) + BigRat(n - 3, 2);
  return triple_product_integral_exact(j1, j2, j3, m, n).coeff / weight_integral(0, p).coeff;
}

BigRat wigner_threej_squared(const Triad& t) {
  const int L = t.perimeter();
  if (!triangle(t.l1, t.l2, t.l3) || L % 2 != 0) return BigRat(0);
  const int g = L / 2;
  const BigRat root = fact(g) / (fact(g - t.l1) * fact(g - t.l2) * fact(g - t.l3));
  return fact(L - 2 * t.l1) * fact(L - 2 * t.l2) * fact(L - 2 * t.l3) / fact(L + 1) * root * root;
}

SqrtRational racah_sixj(int j1, int j2, int j3, int j4, int j5, int j6) {
  if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) || !triangle(j4, j5, j3))
    return {};
  const BigRat delta = triangle_coeff(j1, j2, j3) * triangle_coeff(j1, j5, j6) * triangle_coeff(j4, j2, j6) *
                       triangle_coeff(j4, j5, j3);
  const int a[4] = {j1 + j2 + j3, j1 + j5 + j6, j4 + j2 + j6, j4 + j5 + j3};
  const int b[3] = {j1 + j2 + j4 + j5, j2 + j3 + j5 + j6, j3 + j1 + j6 + j4};
  const int lo = *std::max_element(a, a + 4);
  const int hi = *std::min_element(b, b + 3);
  BigRat sum;
  for (int t = lo; t <= hi; ++t) {
    BigRat den(1);
    for (int x : a) den *= fact(t - x);
    for (int x : b) den *= fact(x - t);
    const BigRat term = fact(t + 1) / den;
    sum += (t % 2 == 0) ? term : -term;
  }
  return SqrtRational(sum.sign(), delta * sum * sum);
}

BigRat i_by_racah_n3(const CouplingLabels& labels) {
  if (!labels.admissible()) return BigRat(0);
  const auto& l = labels.l;
  SqrtRational product = SqrtRational::from_rational(BigRat((l[3] + l[4] + l[5]) % 2 == 0 ? 1 : -1));
  for (const Triad& t : labels.triads()) {
    const int phase = (t.perimeter() / 2) % 2 == 0 ? 1 : -1;
    product = product * SqrtRational(phase, wigner_threej_squared(t));
  }
  product = product * racah_sixj(l[0], l[1], l[2], l[3], l[4], l[5]);
  const auto value = product.exact();
  if (!value) throw std::logic_error("SO(3) coupling product is not rational for " + labels.to_string());
  return *value;
}

QuadratureResult i_by_quadrature_n3(const CouplingLabels& labels, const QuadratureSpec& spec) {
  const auto& l = labels.l;
  for (int x : l)
    if (x < 0) throw std::invalid_argument("negative label");
  const int lmax = *std::max_element(l.begin(), l.end());
  const int points = spec.points == 0 ? 2 * lmax + 1 : spec.points;
  if (points < lmax + 1)
    throw ResolutionTooLow("quadrature needs at least " + std::to_string(lmax + 1) + " points per angle, got " +
                           std::to_string(points));

  const GaussRule rule = gauss_legendre(points);
  const int nx = points, nphi = points;

  struct Node {
    double x, s, w;
    std::vector<double> p; // P_0 .. P_lmax at x
  };
  std::vector<Node> nodes(nx);
  for (int i = 0; i < nx; ++i) {
    Node& nd = nodes[i];
    nd.x = rule.nodes[i];
    nd.s = std::sqrt(std::max(0.0, 1.0 - nd.x * nd.x));
    nd.w = rule.weights[i] / 2.0;
    nd.p.resize(lmax + 1);
    legendre_all(lmax, nd.x, nd.p.data());
  }
  std::vector<double> cphi(nphi), sphi(nphi);
  for (int k = 0; k < nphi; ++k) {
    cphi[k] = std::cos(2.0 * std::numbers::pi * k / nphi);
    sphi[k] = std::sin(2.0 * std::numbers::pi * k / nphi);
  }

  // Each unit vector carries P_{l_i} of its own polar cosine; the edges
  // carry P_{l6}(e1.e2), P_{l5}(e3.e1), P_{l4}(e2.e3).
  std::vector<double> pbuf(lmax + 1);
  CompensatedSum sum;
  const double phi_weight = 1.0 / (static_cast<double>(nphi) * nphi);
  for (const Node& a : nodes) {
    const double wa = a.w * a.p[l[0]];
    if (wa == 0.0) continue;
    for (const Node& b : nodes) {
      const double wb = wa * b.w * b.p[l[1]];
      if (wb == 0.0) continue;
      for (const Node& c : nodes) {
        const double wc = wb * c.w * c.p[l[2]] * phi_weight;
        if (wc == 0.0) continue;
        for (int kb = 0; kb < nphi; ++kb) {
          const double bx = b.s * cphi[kb], by = b.s * sphi[kb];
          const double ab = a.s * bx + a.x * b.x;
          legendre_all(l[5], ab, pbuf.data());
          const double w_ab = wc * pbuf[l[5]];
          for (int kc = 0; kc < nphi; ++kc) {
            const double cx = c.s * cphi[kc], cy = c.s * sphi[kc];
            const double ca = a.s * cx + a.x * c.x;
            const double bc = bx * cx + by * cy + b.x * c.x;
            legendre_all(l[4], ca, pbuf.data());
            const double p5 = pbuf[l[4]];
            legendre_all(l[3], bc, pbuf.data());
            sum.add(w_ab * p5 * pbuf[l[3]]);
          }
        }
      }
    }
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  // Each term is a product of about 4 lmax + 12 rounded operations; the
  // compensated sum itself adds O(eps) relative to the total magnitude.
  const double per_term = (4.0 * lmax + 16.0) * eps;
  return {sum.value(), per_term * sum.abs_total() + 2.0 * eps * std::abs(sum.value()), points};
}

} // namespace soncoup
