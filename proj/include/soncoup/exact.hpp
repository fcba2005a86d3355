#pragma once

// Exact scalar, polynomial and rational-function arithmetic in one
// indeterminate n. Every value is immutable once built.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "soncoup/errors.hpp"

namespace soncoup {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class BigRat {
public:
  BigRat() = default;
  BigRat(long value) : q_(value) {} // NOLINT: implicit by intent
  BigRat(long num, long den);
  BigRat(const BigInt& value) : q_(value) {} // NOLINT
  BigRat(const BigInt& num, const BigInt& den);
  explicit BigRat(const mpq_class& value) : q_(value) { q_.canonicalize(); }

  /// Parses "p" or "p/q" in base 10.
  static BigRat parse(std::string_view text);
  static BigRat factorial(long k);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(10); }

  BigRat abs() const;
  BigRat pow(long e) const;
  BigInt floor() const;

  BigRat operator-() const { return BigRat(mpq_class(-q_)); }
  BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
  BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
  BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

/// Dense univariate polynomial in n, coefficients in ascending degree.
/// The zero polynomial has no coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coeffs);
  Poly(const BigRat& constant); // NOLINT
  Poly(long constant) : Poly(BigRat(constant)) {} // NOLINT

  /// The indeterminate n.
  static Poly n();
  /// a*n + b
  static Poly linear(const BigRat& a, const BigRat& b);

  const std::vector<BigRat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const BigRat& lead() const;
  BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(); }

  BigRat eval(const BigRat& x) const;
  Poly pow(unsigned e) const;

  /// Rational content c with sign of the leading coefficient, such that
  /// p / c has coprime integer coefficients and positive leading term.
  BigRat content() const;
  Poly primitive() const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const BigRat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRat& s) { return a *= s; }
  friend Poly operator*(const BigRat& s, Poly a) { return a *= s; }

  /// Quotient and remainder over the rationals; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// Exact quotient; throws if the division leaves a remainder.
  Poly exact_div(const Poly& divisor) const;

  /// Expanded form, e.g. "n^2+4*n-24".
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

private:
  void trim();
  std::vector<BigRat> c_;
};

/// Monic gcd over Q; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

/// prod_{i=0}^{k-1} (a*n + b + i); the constant 1 for k = 0.
Poly pochhammer_poly(const BigRat& b, long k, const BigRat& a);

/// Best-effort factorization over Z: content, rational linear factors, and
/// whatever is left. Multiplying it back reproduces the input exactly.
struct Factorization {
  BigRat content;
  std::vector<std::pair<Poly, unsigned>> factors; // primitive, positive lead
  Poly expand() const;
};
Factorization factor_for_display(const Poly& p);

/// Rational function num/den in canonical form: gcd(num, den) = 1, den is a
/// primitive integer polynomial with positive leading coefficient, and num
/// carries the overall rational scale. Zero is 0/1.
class RatFunc {
public:
  RatFunc() : den_(1) {}
  RatFunc(const BigRat& c) : num_(c), den_(1) {} // NOLINT
  RatFunc(long c) : RatFunc(BigRat(c)) {}        // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}   // NOLINT

  static RatFunc normalize(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Exact value at x; throws PoleError when den(x) = 0.
  BigRat eval(const BigRat& x) const;
  RatFunc pow(long e) const;
  RatFunc inverse() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Factored display form, e.g. "4*(n-2)/((n-1)*n^3*(n+2)^3)".
  /// parse_ratfunc() reads it back.
  std::string to_string() const;
  /// LaTeX form, e.g. "\frac{4\,(n-2)}{(n-1)\,n^{3}\,(n+2)^{3}}".
  std::string to_latex() const;

private:
  Poly num_;
  Poly den_;
};

/// Parses arithmetic over integers and n with + - * / ^, parentheses and
/// implicit multiplication ("4 (n-2) n^3").
RatFunc parse_ratfunc(std::string_view text);

} // namespace soncoup
