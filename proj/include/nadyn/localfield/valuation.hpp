#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace nadyn::localfield {

/// p-adic valuation normalized by v(p) = 1.
///
/// Three states: an exact rational value, +infinity (the element is exactly
/// zero), or a lower bound (the element vanishes modulo the working precision,
/// so only "v >= bound" is known).
class Valuation {
 public:
  enum class Kind { finite, infinite, at_least };

  Valuation() : kind_(Kind::infinite) {}

  static Valuation of(mpq_class v) { return Valuation(Kind::finite, std::move(v)); }
  static Valuation of(long v) { return of(mpq_class(v)); }
  static Valuation infinite() { return Valuation(); }
  static Valuation at_least(mpq_class bound) { return Valuation(Kind::at_least, std::move(bound)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  bool is_lower_bound() const { return kind_ == Kind::at_least; }

  // Exact value; throws PrecisionError for lower bounds and DomainError for
  // infinity.
  const mpq_class& exact() const;

  // The finite value or the lower bound. Undefined for infinity.
  const mpq_class& bound() const { return value_; }

  // True when v >= x is certain.
  bool certainly_ge(const mpq_class& x) const {
    return kind_ == Kind::infinite || value_ >= x;
  }

  // "n/d" for finite values, "inf", or ">=n/d".
  std::string to_string() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ == Kind::infinite || a.value_ == b.value_;
  }

 private:
  Valuation(Kind k, mpq_class v) : kind_(k), value_(std::move(v)) { value_.canonicalize(); }

  Kind kind_;
  mpq_class value_;
};

// v(ab) = v(a) + v(b); an exact zero factor wins over a lower bound.
Valuation operator+(const Valuation& a, const Valuation& b);
Valuation operator+(const Valuation& a, const mpq_class& shift);

// Ultrametric lower bound for v(a + b).
Valuation min(const Valuation& a, const Valuation& b);

std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

// Multiplicity of p in a nonzero rational.
long padic_order(const mpq_class& q, long p);
long padic_order(const mpz_class& n, long p);

}  // namespace nadyn::localfield
