#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "nadyn/localfield/context.hpp"
#include "nadyn/localfield/valuation.hpp"

namespace nadyn::localfield {

/// An exact rational number regarded as an element of Q_p.
class ExactQp {
 public:
  using Context = PrimeContext;

  ExactQp() = default;
  ExactQp(const Context& ctx, mpq_class value) : ctx_(ctx), value_(std::move(value)) {
    value_.canonicalize();
  }

  static ExactQp zero(const Context& ctx) { return ExactQp(ctx, 0); }
  static ExactQp one(const Context& ctx) { return ExactQp(ctx, 1); }
  static ExactQp from_rational(const Context& ctx, const mpq_class& q) { return ExactQp(ctx, q); }

  const Context& context() const { return ctx_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_exact() const { return true; }
  Valuation valuation() const;
  // nullopt: no precision loss anywhere.
  std::optional<mpq_class> absolute_precision() const { return std::nullopt; }

  // Image in F_p; requires v >= 0.
  long residue() const;

  ExactQp operator-() const { return ExactQp(ctx_, -value_); }
  friend ExactQp operator+(const ExactQp& a, const ExactQp& b);
  friend ExactQp operator-(const ExactQp& a, const ExactQp& b);
  friend ExactQp operator*(const ExactQp& a, const ExactQp& b);
  friend ExactQp operator/(const ExactQp& a, const ExactQp& b);
  ExactQp& operator+=(const ExactQp& o) { return *this = *this + o; }
  ExactQp& operator-=(const ExactQp& o) { return *this = *this - o; }
  ExactQp& operator*=(const ExactQp& o) { return *this = *this * o; }

  std::string to_string() const { return rational_string(value_); }

 private:
  Context ctx_;
  mpq_class value_;
};

}  // namespace nadyn::localfield
