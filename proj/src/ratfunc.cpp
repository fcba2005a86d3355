#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>

#include "soncoup/exact.hpp"

namespace soncoup {

// --------------------------------------------------------------- RatFunc

RatFunc RatFunc::normalize(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ZeroDenominator();
  RatFunc r;
  if (num.is_zero()) return r;
  Poly a = num, b = den;
  const Poly g = poly_gcd(a, b);
  if (g.degree() > 0) {
    a = a.exact_div(g);
    b = b.exact_div(g);
  }
  const BigRat s = b.content();
  r.num_ = a * (BigRat(1) / s);
  r.den_ = b * (BigRat(1) / s);
  return r;
}

BigRat RatFunc::eval(const BigRat& x) const {
  const BigRat d = den_.eval(x);
  if (d.is_zero()) throw PoleError("rational function has a pole at n = " + x.to_string());
  return num_.eval(x) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDenominator();
  return normalize(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r; // powers of coprime polynomials stay coprime; content of a product of primitives is 1
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::normalize(a.num_ + b.num_, a.den_);
  const Poly g = poly_gcd(a.den_, b.den_);
  if (g.degree() <= 0) return RatFunc::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  const Poly ad = a.den_.exact_div(g), bd = b.den_.exact_div(g);
  const Poly num = a.num_ * bd + b.num_ * ad;
  // With both inputs reduced, gcd(num, ad*bd*g) = gcd(num, g).
  RatFunc r = RatFunc::normalize(num, g);
  if (r.is_zero()) return r;
  const Poly den = r.den_ * ad * bd;
  const BigRat s = den.content();
  r.num_ = r.num_ * (BigRat(1) / s);
  r.den_ = den * (BigRat(1) / s);
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_constant() && b.den_.is_constant()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  const Poly g1 = poly_gcd(an, bd);
  if (g1.degree() > 0) {
    an = an.exact_div(g1);
    bd = bd.exact_div(g1);
  }
  const Poly g2 = poly_gcd(bn, ad);
  if (g2.degree() > 0) {
    bn = bn.exact_div(g2);
    ad = ad.exact_div(g2);
  }
  const Poly den = ad * bd;
  const BigRat s = den.content();
  RatFunc r;
  r.num_ = an * bn * (BigRat(1) / s);
  r.den_ = den * (BigRat(1) / s);
  return r;
}

// --------------------------------------------------------- factorization

Poly Factorization::expand() const {
  Poly p(content);
  for (const auto& [f, e] : factors) p *= f.pow(e);
  return p;
}

namespace {

std::vector<BigInt> divisors(BigInt value) {
  value = abs(value);
  std::vector<std::pair<BigInt, unsigned>> primes;
  for (unsigned long p = 2; p < 100000 && BigInt(p) * p <= value; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(value.get_mpz_t(), p)) {
      mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), p);
      ++e;
    }
    if (e) primes.emplace_back(BigInt(p), e);
  }
  if (value > 1) primes.emplace_back(value, 1); // may be composite; best effort
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : primes) {
    const std::size_t sz = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cauchy bound on the absolute value of any root.
BigRat root_bound(const Poly& p) {
  BigRat m;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, (p.coeffs()[i] / p.lead()).abs());
  return m + BigRat(1);
}

bool divides(const Poly& p, const Poly& f) { return p.divmod(f).second.is_zero(); }

} // namespace

Factorization factor_for_display(const Poly& p) {
  Factorization out;
  if (p.is_zero()) {
    out.content = BigRat(0);
    return out;
  }
  out.content = p.content();
  Poly rest = p.primitive();

  unsigned zeros = 0;
  while (rest.degree() > 0 && rest.coeffs().front().is_zero()) {
    rest = rest.exact_div(Poly::n());
    ++zeros;
  }
  if (zeros) out.factors.emplace_back(Poly::n(), zeros);

  if (rest.degree() > 0) {
    const BigRat bound = root_bound(rest);
    const auto us = divisors(rest.coeffs().front().num());
    const auto vs = divisors(rest.lead().num());
    std::vector<BigRat> candidates;
    for (const auto& v : vs)
      for (const auto& u : us) {
        const BigRat r(u, v);
        if (r > bound) continue;
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (rest.degree() <= 0) break;
      if (!rest.eval(r).is_zero()) continue;
      const Poly f = Poly::linear(BigRat(r.den()), BigRat(BigInt(-r.num()))); // v*n - u
      unsigned e = 0;
      while (rest.degree() > 0 && divides(rest, f)) {
        rest = rest.exact_div(f);
        ++e;
      }
      out.factors.emplace_back(f, e);
    }
  }
  // rest is now a constant (+1 after primitive division) or a factor without rational roots
  if (rest.degree() > 0) {
    const BigRat c = rest.content();
    out.content *= c;
    out.factors.emplace_back(rest.primitive(), 1);
  } else {
    out.content *= rest.coeffs().front();
  }
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    if (x.first.degree() == 1) // root descending: (n-2) before (n-1) before n
      return x.first.coeffs()[0] / x.first.coeffs()[1] < y.first.coeffs()[0] / y.first.coeffs()[1];
    return false;
  });
  return out;
}

// ---------------------------------------------------------------- output

namespace {

struct Piece {
  std::string text;
  std::string latex;
};

std::string poly_latex(const Poly& p) {
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigRat& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    const BigRat mag = c.abs();
    out += c.sign() < 0 ? "-" : (first ? "" : "+");
    if (i == 0 || mag != BigRat(1)) out += mag.to_string();
    if (i >= 1) out += "n";
    if (i >= 2) out += "^{" + std::to_string(i) + "}";
    first = false;
  }
  return out;
}

std::vector<Piece> factor_pieces(const Factorization& f) {
  std::vector<Piece> out;
  for (const auto& [poly, e] : f.factors) {
    const bool bare = poly == Poly::n();
    Piece piece;
    piece.text = bare ? "n" : "(" + poly.to_string() + ")";
    piece.latex = bare ? "n" : "(" + poly_latex(poly) + ")";
    if (e > 1) {
      piece.text += "^" + std::to_string(e);
      piece.latex += "^{" + std::to_string(e) + "}";
    }
    out.push_back(std::move(piece));
  }
  return out;
}

struct Display {
  bool negative = false;
  std::vector<Piece> top, bottom;
};

Display display_parts(const RatFunc& f) {
  Display d;
  if (f.is_zero()) {
    d.top.push_back({"0", "0"});
    return d;
  }
  const Factorization nf = factor_for_display(f.num());
  const Factorization df = factor_for_display(f.den());
  const BigRat c = nf.content / df.content;
  d.negative = c.sign() < 0;
  const BigInt p = abs(c.num()), q = c.den();
  auto top = factor_pieces(nf);
  if (p != 1 || top.empty()) d.top.push_back({p.get_str(), p.get_str()});
  d.top.insert(d.top.end(), top.begin(), top.end());
  if (q != 1) d.bottom.push_back({q.get_str(), q.get_str()});
  auto bottom = factor_pieces(df);
  d.bottom.insert(d.bottom.end(), bottom.begin(), bottom.end());
  return d;
}

} // namespace

std::string RatFunc::to_string() const {
  const Display d = display_parts(*this);
  auto join = [](const std::vector<Piece>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + v[i].text;
    return s;
  };
  std::string out = (d.negative ? "-" : "") + join(d.top);
  if (d.bottom.empty()) return out;
  const std::string bottom = join(d.bottom);
  return out + "/" + (d.bottom.size() > 1 ? "(" + bottom + ")" : bottom);
}

std::string RatFunc::to_latex() const {
  const Display d = display_parts(*this);
  auto join = [](const std::vector<Piece>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "\\," : "") + v[i].latex;
    return s;
  };
  const std::string sign = d.negative ? "-" : "";
  if (d.bottom.empty()) return sign + join(d.top);
  return sign + "\\frac{" + join(d.top) + "}{" + join(d.bottom) + "}";
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'n' || c == '(';
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') { ++pos_; acc = acc + term(); }
      else if (c == '-') { ++pos_; acc = acc - term(); }
      else return acc;
    }
  }
  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') { ++pos_; acc = acc * unary(); }
      else if (c == '/') { ++pos_; acc = acc / unary(); }
      else if (starts_primary()) acc = acc * power();
      else return acc;
    }
  }
  RatFunc unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }
  RatFunc power() {
    RatFunc base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos_; }
    const BigInt e = integer();
    if (!e.fits_slong_p()) fail("exponent too large");
    return base.pow(neg ? -e.get_si() : e.get_si());
  }
  RatFunc primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == 'n') {
      ++pos_;
      return RatFunc(Poly::n());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(BigRat(integer()));
    fail("expected a number, 'n' or '('");
  }
  BigInt integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

} // namespace soncoup
