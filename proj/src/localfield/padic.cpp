#include "nadyn/localfield/padic.hpp"

#include <algorithm>

#include "nadyn/errors.hpp"

namespace nadyn::localfield {

mpz_class prime_power(long p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

namespace {

void require_same(const Padic& a, const Padic& b) {
  if (!(a.context() == b.context())) throw UsageError("operands live in different fields");
}

mpz_class mod_positive(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

long absolute_of(const Padic& x, long exact_marker) {
  auto a = x.absolute_precision();
  return a ? a->get_num().get_si() : exact_marker;
}

}  // namespace

Padic Padic::zero_to(const Context& ctx, long abs_precision) {
  Padic r(ctx);
  r.abs_ = abs_precision;
  return r;
}

Padic Padic::from_unit(const Context& ctx, long shift, const mpz_class& unit, int rel) {
  rel = std::min(rel, ctx.precision);
  if (rel <= 0) return zero_to(ctx, shift);
  Padic r(ctx);
  r.zero_ = false;
  r.abs_ = 0;
  r.shift_ = shift;
  r.rel_ = rel;
  r.unit_ = mod_positive(unit, prime_power(ctx.p, rel));
  if (r.unit_ % ctx.p == 0) throw UsageError("unit part divisible by p");
  return r;
}

Padic Padic::from_rational(const Context& ctx, const mpq_class& q) {
  if (q == 0) return Padic(ctx);
  long v = padic_order(q, ctx.p);
  mpz_class num(q.get_num()), den(q.get_den());
  mpz_class prime(ctx.p);
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  mpz_class modulus = prime_power(ctx.p, ctx.precision);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  return from_unit(ctx, v, num * inv, ctx.precision);
}

Valuation Padic::valuation() const {
  if (!zero_) return Valuation::of(shift_);
  if (abs_ == kExact) return Valuation::infinite();
  return Valuation::at_least(abs_);
}

std::optional<mpq_class> Padic::absolute_precision() const {
  if (!zero_) return mpq_class(shift_ + rel_);
  if (abs_ == kExact) return std::nullopt;
  return mpq_class(abs_);
}

long Padic::residue() const {
  if (zero_) {
    if (abs_ < 1) throw PrecisionError("residue of 0 + O(p^" + std::to_string(abs_) + ")");
    return 0;
  }
  if (shift_ < 0) throw DomainError("residue of a non-integral element");
  if (shift_ > 0) return 0;
  return mpz_class(unit_ % ctx_.p).get_si();
}

std::vector<long> Padic::digits() const {
  std::vector<long> out;
  if (zero_) return out;
  mpz_class u = unit_;
  for (int k = 0; k < rel_; ++k) {
    mpz_class digit;
    mpz_fdiv_qr_ui(u.get_mpz_t(), digit.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(ctx_.p));
    out.push_back(digit.get_si());
  }
  return out;
}

mpq_class Padic::lift() const {
  if (zero_) return 0;
  mpq_class r(unit_);
  if (shift_ >= 0) {
    r *= mpq_class(prime_power(ctx_.p, shift_));
  } else {
    r /= mpq_class(prime_power(ctx_.p, -shift_));
  }
  return r;
}

Padic Padic::operator-() const {
  if (zero_) return *this;
  Padic r = *this;
  r.unit_ = prime_power(ctx_.p, rel_) - unit_;
  return r;
}

Padic operator+(const Padic& a, const Padic& b) {
  require_same(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const auto& ctx = a.ctx_;
  long abs = std::min(absolute_of(a, Padic::kExact), absolute_of(b, Padic::kExact));
  if (a.zero_ && b.zero_) return Padic::zero_to(ctx, abs);
  long v = a.zero_ ? b.shift_ : (b.zero_ ? a.shift_ : std::min(a.shift_, b.shift_));
  if (abs <= v) return Padic::zero_to(ctx, abs);
  mpz_class x = 0;
  for (const Padic* t : {&a, &b}) {
    if (!t->zero_) x += t->unit_ * prime_power(ctx.p, t->shift_ - v);
  }
  x = mod_positive(x, prime_power(ctx.p, abs - v));
  if (x == 0) return Padic::zero_to(ctx, abs);
  long t = padic_order(x, ctx.p);
  mpz_class unit = x / prime_power(ctx.p, t);
  long shift = v + t;
  return Padic::from_unit(ctx, shift, unit, static_cast<int>(std::min<long>(abs - shift, ctx.precision)));
}

Padic operator*(const Padic& a, const Padic& b) {
  require_same(a, b);
  const auto& ctx = a.ctx_;
  if (a.is_exact_zero() || b.is_exact_zero()) return Padic::zero(ctx);
  if (a.zero_ && b.zero_) return Padic::zero_to(ctx, a.abs_ + b.abs_);
  if (a.zero_) return Padic::zero_to(ctx, a.abs_ + b.shift_);
  if (b.zero_) return Padic::zero_to(ctx, b.abs_ + a.shift_);
  int rel = std::min(a.rel_, b.rel_);
  return Padic::from_unit(ctx, a.shift_ + b.shift_, a.unit_ * b.unit_, rel);
}

Padic operator/(const Padic& a, const Padic& b) {
  require_same(a, b);
  const auto& ctx = a.ctx_;
  if (b.zero_) throw PrecisionError("insufficient precision: division by an element indistinguishable from zero");
  if (a.is_exact_zero()) return a;
  if (a.zero_) return Padic::zero_to(ctx, a.abs_ - b.shift_);
  int rel = std::min(a.rel_, b.rel_);
  mpz_class modulus = prime_power(ctx.p, rel);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), modulus.get_mpz_t());
  return Padic::from_unit(ctx, a.shift_ - b.shift_, a.unit_ * inv, rel);
}

std::string Padic::to_string() const {
  if (zero_) {
    return abs_ == kExact ? "0" : "O(" + std::to_string(ctx_.p) + "^" + std::to_string(abs_) + ")";
  }
  std::string s = unit_.get_str();
  if (shift_ != 0) s = std::to_string(ctx_.p) + "^" + std::to_string(shift_) + "*" + s;
  return s + " + O(" + std::to_string(ctx_.p) + "^" + std::to_string(shift_ + rel_) + ")";
}

}  // namespace nadyn::localfield
