#pragma once

#include <gmpxx.h>

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "nadyn/localfield/context.hpp"
#include "nadyn/localfield/valuation.hpp"

namespace nadyn::localfield {

/// Capped-relative-precision element of Q_p.
///
/// A nonzero value is the coset p^shift * unit + O(p^(shift + rel)) with
/// unit in [1, p^rel) prime to p and rel <= cap. Zero carries the absolute
/// precision to which it is known to vanish; an exact zero (from constants)
/// has no precision floor.
class Padic {
 public:
  using Context = PrimeContext;

  Padic() = default;

  static Padic zero(const Context& ctx) { return Padic(ctx); }
  static Padic one(const Context& ctx) { return from_rational(ctx, 1); }
  static Padic from_rational(const Context& ctx, const mpq_class& q);
  // The element 0 + O(p^abs).
  static Padic zero_to(const Context& ctx, long abs_precision);
  // p^shift * unit with the given relative precision (clamped to the cap).
  static Padic from_unit(const Context& ctx, long shift, const mpz_class& unit, int rel);

  const Context& context() const { return ctx_; }

  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && abs_ == kExact; }
  bool is_exact() const { return is_exact_zero(); }
  Valuation valuation() const;
  std::optional<mpq_class> absolute_precision() const;
  int relative_precision() const { return zero_ ? 0 : rel_; }
  long shift() const { return shift_; }
  const mpz_class& unit() const { return unit_; }

  long residue() const;
  // Base-p digits of the unit, least significant first, `rel` of them.
  std::vector<long> digits() const;
  // The representative p^shift * unit as a rational.
  mpq_class lift() const;

  Padic operator-() const;
  friend Padic operator+(const Padic& a, const Padic& b);
  friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }
  friend Padic operator*(const Padic& a, const Padic& b);
  friend Padic operator/(const Padic& a, const Padic& b);
  Padic& operator+=(const Padic& o) { return *this = *this + o; }
  Padic& operator-=(const Padic& o) { return *this = *this - o; }
  Padic& operator*=(const Padic& o) { return *this = *this * o; }

  std::string to_string() const;

 private:
  static constexpr long kExact = LONG_MAX;

  explicit Padic(const Context& ctx) : ctx_(ctx) {}

  Context ctx_;
  bool zero_ = true;
  long abs_ = kExact;  // zero only
  long shift_ = 0;
  int rel_ = 0;
  mpz_class unit_;
};

mpz_class prime_power(long p, long k);

}  // namespace nadyn::localfield
