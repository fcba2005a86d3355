#pragma once

#include <optional>
#include <string>
#include <variant>

#include "soncoup/exact.hpp"

namespace soncoup {

/// Either symbolic in n, or a fixed integer n.
class Mode {
public:
  static Mode symbolic() { return Mode(true, 0); }
  static Mode fixed(long n) { return Mode(false, n); }

  bool is_symbolic() const { return symbolic_; }
  long n() const;
  std::string to_string() const { return symbolic_ ? "symbolic" : std::to_string(n_); }

  friend bool operator==(const Mode&, const Mode&) = default;

private:
  Mode(bool symbolic, long n) : symbolic_(symbolic), n_(n) {}
  bool symbolic_;
  long n_;
};

/// A rational function of n (symbolic mode) or an exact rational (fixed n).
using CouplingValue = std::variant<RatFunc, BigRat>;

bool is_zero(const CouplingValue& v);
/// The value at integer n; a BigRat is returned unchanged.
BigRat evaluate(const CouplingValue& v, long n);
std::string to_string(const CouplingValue& v);

/// sign * sqrt(radicand), radicand >= 0; sign is 0 exactly when radicand is 0.
class SqrtRational {
public:
  SqrtRational() = default;
  SqrtRational(int sign, BigRat radicand);
  /// The signed square root of q^2 * sign(q), i.e. the value q itself.
  static SqrtRational from_rational(const BigRat& q);

  int sign() const { return sign_; }
  const BigRat& radicand() const { return radicand_; }
  BigRat square() const { return radicand_; }
  /// The exact value when the radicand is a perfect square.
  std::optional<BigRat> exact() const;
  double to_double() const;
  /// "0", "p/q" when exact, otherwise "-sqrt(p/q)".
  std::string to_string() const;

  friend SqrtRational operator*(const SqrtRational& x, const SqrtRational& y);
  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;

private:
  int sign_ = 0;
  BigRat radicand_;
};

/// coeff * pi^pi_power.
struct PiRational {
  BigRat coeff;
  int pi_power = 0;

  friend bool operator==(const PiRational&, const PiRational&) = default;
};

} // namespace soncoup
