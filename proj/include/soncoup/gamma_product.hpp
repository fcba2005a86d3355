#pragma once

// Products of gamma functions whose arguments are affine in n, together with
// a rational-function prefactor. gp_reduce() cancels the gamma content by
// Pochhammer steps and returns the rational function of n that remains.

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "soncoup/exact.hpp"

namespace soncoup {

/// Gamma(a*n + b) with a in {0, 1/2, 1} and b an integer or half-integer.
struct GammaKey {
  BigRat a;
  BigRat b;

  friend bool operator==(const GammaKey&, const GammaKey&) = default;
  friend std::strong_ordering operator<=>(const GammaKey& x, const GammaKey& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
  std::string argument_string() const;
};

class GammaProduct {
public:
  GammaProduct() : prefactor_(1) {}
  explicit GammaProduct(RatFunc prefactor) : prefactor_(std::move(prefactor)) {}

  /// Gamma(a*n + b)^exponent.
  static GammaProduct gamma(const BigRat& a, const BigRat& b, int exponent = 1);
  /// Gamma(a*n + b + shift) / Gamma(a*n + b), left unreduced.
  static GammaProduct factorial_shift(const BigRat& b, const BigRat& a, long shift);

  const RatFunc& prefactor() const { return prefactor_; }
  const std::map<GammaKey, int>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty() && prefactor_ == RatFunc(1); }

  GammaProduct pow(int k) const;
  GammaProduct& operator*=(const GammaProduct& o);
  GammaProduct& operator*=(const RatFunc& r);
  friend GammaProduct operator*(GammaProduct x, const GammaProduct& y) { return x *= y; }
  friend GammaProduct operator*(GammaProduct x, const RatFunc& r) { return x *= r; }
  friend bool operator==(const GammaProduct&, const GammaProduct&) = default;

  /// Diagnostic rendering, e.g. "Γ(n/2)^2 · Γ(n-2)^{-1} · (n-1)/n".
  std::string to_string() const;

private:
  void add_factor(const GammaKey& key, int exponent);

  RatFunc prefactor_;
  std::map<GammaKey, int> factors_;
};

inline GammaProduct gp_mul(const GammaProduct& x, const GammaProduct& y) { return x * y; }
inline GammaProduct gp_pow(const GammaProduct& x, int k) { return x.pow(k); }

/// Reduces to a rational function of n. Throws GammaResidueError when some
/// gamma content does not cancel.
RatFunc gp_reduce(const GammaProduct& x);

/// Substitutes an integer n directly, evaluating every gamma factor as an
/// exact factorial or rational multiple of sqrt(pi). Throws PoleError when a
/// factor hits a non-positive integer and GammaResidueError when the powers
/// of sqrt(pi) do not cancel.
BigRat gp_evaluate(const GammaProduct& x, long n);

/// Number of GammaResidueError exceptions raised in this process so far.
std::uint64_t gamma_residue_error_count();

} // namespace soncoup
