#include "soncoup/gamma_product.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

namespace soncoup {

namespace {

std::atomic<std::uint64_t> g_residue_errors{0};

[[noreturn]] void throw_residue(const std::string& residue) {
  g_residue_errors.fetch_add(1, std::memory_order_relaxed);
  throw GammaResidueError(residue);
}

const BigRat kHalf(1, 2);

bool is_half_integer(const BigRat& b) { return b.den() == 2; }

// Gamma(k + 1/2) / sqrt(pi) for any integer k.
BigRat half_gamma_over_sqrt_pi(long k) {
  if (k >= 0) {
    // (2k)! / (4^k k!)
    return BigRat::factorial(2 * k) / (BigRat(4).pow(k) * BigRat::factorial(k));
  }
  const long j = -k; // Gamma(1/2 - j) = (-4)^j j! / (2j)!
  return BigRat(-4).pow(j) * BigRat::factorial(j) / BigRat::factorial(2 * j);
}

std::string render(const GammaKey& key, int e) {
  std::string s = "Γ(" + key.argument_string() + ")";
  if (e != 1) s += "^" + (e < 0 ? "{" + std::to_string(e) + "}" : std::to_string(e));
  return s;
}

} // namespace

std::string GammaKey::argument_string() const {
  std::string s;
  if (a == BigRat(1)) s = "n";
  else if (a == kHalf) s = "n/2";
  else if (!a.is_zero()) s = a.to_string() + "*n";
  if (s.empty()) return b.to_string();
  if (b.sign() > 0) s += "+" + b.to_string();
  else if (b.sign() < 0) s += b.to_string();
  return s;
}

GammaProduct GammaProduct::gamma(const BigRat& a, const BigRat& b, int exponent) {
  if (!(a.is_zero() || a == kHalf || a == BigRat(1)))
    throw std::invalid_argument("gamma argument coefficient must be 0, 1/2 or 1");
  if (!(b.is_integer() || is_half_integer(b)))
    throw std::invalid_argument("gamma argument offset must be an integer or half-integer");
  GammaProduct g;
  g.add_factor(GammaKey{a, b}, exponent);
  return g;
}

GammaProduct GammaProduct::factorial_shift(const BigRat& b, const BigRat& a, long shift) {
  if (shift == 0) return GammaProduct();
  GammaProduct g = gamma(a, b + BigRat(shift), 1);
  g.add_factor(GammaKey{a, b}, -1);
  return g;
}

void GammaProduct::add_factor(const GammaKey& key, int exponent) {
  if (exponent == 0) return;
  auto [it, inserted] = factors_.try_emplace(key, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  }
}

GammaProduct GammaProduct::pow(int k) const {
  GammaProduct out(prefactor_.pow(k));
  if (k == 0) return out;
  for (const auto& [key, e] : factors_) out.factors_.emplace(key, e * k);
  return out;
}

GammaProduct& GammaProduct::operator*=(const GammaProduct& o) {
  prefactor_ *= o.prefactor_;
  for (const auto& [key, e] : o.factors_) add_factor(key, e);
  return *this;
}

GammaProduct& GammaProduct::operator*=(const RatFunc& r) {
  prefactor_ *= r;
  return *this;
}

std::string GammaProduct::to_string() const {
  std::string s;
  for (const auto& [key, e] : factors_) s += render(key, e) + " · ";
  return s + prefactor_.to_string();
}

RatFunc gp_reduce(const GammaProduct& x) {
  // Group by (a, b mod 1): within a group every offset differs by an integer.
  std::map<std::pair<BigRat, BigRat>, std::vector<std::pair<BigRat, int>>> groups;
  for (const auto& [key, e] : x.factors()) {
    const BigRat frac = key.b - BigRat(key.b.floor());
    groups[{key.a, frac}].emplace_back(key.b, e);
  }

  Poly top(1), bottom(1);
  BigRat scale(1);
  int sqrt_pi = 0;
  std::string residue;

  for (const auto& [group, members] : groups) {
    const BigRat& a = group.first;
    if (a.is_zero()) {
      for (const auto& [b, e] : members) {
        if (b.is_integer()) {
          if (b.sign() <= 0) residue += render(GammaKey{a, b}, e) + " ";
          else scale *= BigRat::factorial(b.num().get_si() - 1).pow(e);
        } else {
          scale *= half_gamma_over_sqrt_pi(b.floor().get_si()).pow(e);
          sqrt_pi += e;
        }
      }
      continue;
    }
    int total = 0;
    for (const auto& m : members) total += m.second;
    if (total != 0) {
      for (const auto& [b, e] : members) residue += render(GammaKey{a, b}, e) + " ";
      continue;
    }
    // Rewrite every Gamma(a n + b) as Gamma(a n + b0) (a n + b0)_{b - b0};
    // the Gamma(a n + b0) parts cancel because the exponents sum to zero.
    const BigRat b0 = members.front().first; // map order: smallest offset first
    for (const auto& [b, e] : members) {
      const long k = (b - b0).num().get_si();
      if (k == 0) continue;
      const Poly p = pochhammer_poly(b0, k, a);
      if (e > 0) top *= p.pow(static_cast<unsigned>(e));
      else bottom *= p.pow(static_cast<unsigned>(-e));
    }
  }
  if (sqrt_pi != 0) residue += "sqrt(pi)^" + std::to_string(sqrt_pi) + " ";
  if (!residue.empty()) {
    residue.pop_back();
    throw_residue(residue);
  }
  return x.prefactor() * RatFunc::normalize(top * scale, bottom);
}

BigRat gp_evaluate(const GammaProduct& x, long n) {
  BigRat value = x.prefactor().eval(BigRat(n));
  int sqrt_pi = 0;
  for (const auto& [key, e] : x.factors()) {
    const BigRat arg = key.a * BigRat(n) + key.b;
    if (arg.is_integer()) {
      if (arg.sign() <= 0)
        throw PoleError("Γ(" + key.argument_string() + ") has a pole at n = " + std::to_string(n));
      value *= BigRat::factorial(arg.num().get_si() - 1).pow(e);
    } else {
      value *= half_gamma_over_sqrt_pi(arg.floor().get_si()).pow(e);
      sqrt_pi += e;
    }
  }
  if (sqrt_pi != 0) throw_residue("sqrt(pi)^" + std::to_string(sqrt_pi) + " at n = " + std::to_string(n));
  return value;
}

std::uint64_t gamma_residue_error_count() { return g_residue_errors.load(std::memory_order_relaxed); }

} // namespace soncoup
