#include "nadyn/localfield/exact.hpp"

#include "nadyn/errors.hpp"

namespace nadyn::localfield {

namespace {

void require_same(const ExactQp& a, const ExactQp& b) {
  if (!(a.context() == b.context())) throw UsageError("operands live in different fields");
}

}  // namespace

Valuation ExactQp::valuation() const {
  if (value_ == 0) return Valuation::infinite();
  return Valuation::of(padic_order(value_, ctx_.p));
}

long ExactQp::residue() const {
  if (value_ == 0) return 0;
  long v = padic_order(value_, ctx_.p);
  if (v < 0) throw DomainError("residue of a non-integral element");
  if (v > 0) return 0;
  mpz_class prime(ctx_.p);
  mpz_class num = mpz_class(value_.get_num()) % prime;
  mpz_class inv;
  mpz_class den = mpz_class(value_.get_den());
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  mpz_class r = (num * inv) % prime;
  if (r < 0) r += prime;
  return r.get_si();
}

ExactQp operator+(const ExactQp& a, const ExactQp& b) {
  require_same(a, b);
  return ExactQp(a.ctx_, a.value_ + b.value_);
}

ExactQp operator-(const ExactQp& a, const ExactQp& b) {
  require_same(a, b);
  return ExactQp(a.ctx_, a.value_ - b.value_);
}

ExactQp operator*(const ExactQp& a, const ExactQp& b) {
  require_same(a, b);
  return ExactQp(a.ctx_, a.value_ * b.value_);
}

ExactQp operator/(const ExactQp& a, const ExactQp& b) {
  require_same(a, b);
  if (b.value_ == 0) throw PrecisionError("division by zero");
  return ExactQp(a.ctx_, a.value_ / b.value_);
}

}  // namespace nadyn::localfield
