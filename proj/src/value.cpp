#include "soncoup/value.hpp"

#include <cmath>
#include <stdexcept>

namespace soncoup {

long Mode::n() const {
  if (symbolic_) throw std::logic_error("symbolic mode has no fixed n");
  return n_;
}

bool is_zero(const CouplingValue& v) {
  return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

BigRat evaluate(const CouplingValue& v, long n) {
  if (const auto* f = std::get_if<RatFunc>(&v)) return f->eval(BigRat(n));
  return std::get<BigRat>(v);
}

std::string to_string(const CouplingValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

SqrtRational::SqrtRational(int sign, BigRat radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) throw std::domain_error("negative radicand");
  if (radicand_.is_zero()) sign_ = 0;
  else if (sign_ == 0) throw std::domain_error("zero sign with nonzero radicand");
  else sign_ = sign_ > 0 ? 1 : -1;
}

SqrtRational SqrtRational::from_rational(const BigRat& q) { return SqrtRational(q.sign(), q * q); }

std::optional<BigRat> SqrtRational::exact() const {
  const BigInt num = radicand_.num(), den = radicand_.den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return BigRat(sign_ < 0 ? BigInt(-rn) : rn, rd);
}

double SqrtRational::to_double() const { return sign_ * std::sqrt(radicand_.to_double()); }

std::string SqrtRational::to_string() const {
  if (sign_ == 0) return "0";
  if (auto q = exact()) return q->to_string();
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + radicand_.to_string() + ")";
}

SqrtRational operator*(const SqrtRational& x, const SqrtRational& y) {
  return SqrtRational(x.sign_ * y.sign_, x.radicand_ * y.radicand_);
}

} // namespace soncoup
