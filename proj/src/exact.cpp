#include "soncoup/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace soncoup {

// ---------------------------------------------------------------- BigRat

BigRat::BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDenominator();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(s, 10));
    return BigRat(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
}

BigRat BigRat::factorial(long k) {
  if (k < 0) throw std::domain_error("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return BigRat(r);
}

BigRat BigRat::abs() const { return sign() < 0 ? -*this : *this; }

BigRat BigRat::pow(long e) const {
  if (e < 0) return BigRat(1) / pow(-e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRat(n, d);
}

BigInt BigRat::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw ZeroDenominator();
  q_ /= o.q_;
  return *this;
}

// ------------------------------------------------------------------ Poly

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const BigRat& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly Poly::n() { return Poly(std::vector<BigRat>{BigRat(0), BigRat(1)}); }

Poly Poly::linear(const BigRat& a, const BigRat& b) { return Poly(std::vector<BigRat>{b, a}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigRat& Poly::lead() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

BigRat Poly::eval(const BigRat& x) const {
  BigRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

BigRat Poly::content() const {
  if (c_.empty()) return BigRat(1);
  BigInt g = 0, l = 1;
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  BigRat r(g, l);
  return lead().sign() < 0 ? -r : r;
}

Poly Poly::primitive() const {
  if (c_.empty()) return {};
  return *this * (BigRat(1) / content());
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  return *this * (BigRat(1) / lead());
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<BigRat> coeffs;
  coeffs.reserve(out.size());
  for (auto& q : out) coeffs.emplace_back(q);
  return Poly(std::move(coeffs));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const BigRat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw ZeroDenominator();
  if (degree() < divisor.degree()) return {Poly(), *this};
  std::vector<BigRat> rem = c_;
  std::vector<BigRat> quot(c_.size() - divisor.c_.size() + 1);
  const BigRat inv_lead = BigRat(1) / divisor.lead();
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRat t = rem[k + dd] * inv_lead;
    quot[k] = t;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= t * divisor.c_[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

namespace {

std::string signed_term(const BigRat& c, int power, bool first) {
  std::string out;
  BigRat mag = c.abs();
  if (c.sign() < 0) out += "-";
  else if (!first) out += "+";
  const bool unit = mag == BigRat(1);
  if (power == 0 || !unit) {
    out += mag.to_string();
    if (power > 0) out += "*";
  }
  if (power >= 1) out += "n";
  if (power >= 2) out += "^" + std::to_string(power);
  return out;
}

} // namespace

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    out += signed_term(c_[i], i, first);
    first = false;
  }
  return out;
}

// ------------------------------------------------------------------- gcd

namespace {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly to_primitive_int(const Poly& p) {
  const Poly prim = p.primitive();
  IntPoly out;
  out.reserve(prim.coeffs().size());
  for (const auto& c : prim.coeffs()) out.push_back(c.num());
  return out;
}

void make_primitive(IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, both nonzero.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
    make_primitive(a);
  }
  return a;
}

} // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return Poly(1);
  IntPoly a = to_primitive_int(p), b = to_primitive_int(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    if (b.size() == 1) return Poly(1);
  }
  std::vector<BigRat> coeffs;
  coeffs.reserve(a.size());
  for (const auto& c : a) coeffs.emplace_back(c);
  return Poly(std::move(coeffs)).monic();
}

// ------------------------------------------------------------ pochhammer

Poly pochhammer_poly(const BigRat& b, long k, const BigRat& a) {
  if (k < 0) throw std::domain_error("pochhammer_poly: negative length");
  Poly result(1);
  for (long i = 0; i < k; ++i) result *= Poly::linear(a, b + BigRat(i));
  return result;
}

} // namespace soncoup
