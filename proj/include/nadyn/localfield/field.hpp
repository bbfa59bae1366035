#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>

#include "nadyn/localfield/valuation.hpp"

namespace nadyn::localfield {

/// A complete non-archimedean field model: the two base backends and the
/// extension elements built over them all satisfy this.
template <class F>
concept ValuedField = requires(const F& a, const F& b, const typename F::Context& ctx,
                               const mpq_class& q) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.valuation() } -> std::same_as<Valuation>;
  { a.absolute_precision() } -> std::same_as<std::optional<mpq_class>>;
  { a.context() } -> std::convertible_to<typename F::Context>;
  { F::zero(ctx) } -> std::same_as<F>;
  { F::one(ctx) } -> std::same_as<F>;
  { F::from_rational(ctx, q) } -> std::same_as<F>;
  { ctx.prime() } -> std::convertible_to<long>;
  { ctx.ramification() } -> std::convertible_to<int>;
  { ctx.working_precision() } -> std::convertible_to<int>;
};

// Identity embedding; extension fields add an overload for their base.
template <ValuedField F>
F embed(const F& x, const typename F::Context&) {
  return x;
}

// Equal as cosets: the difference vanishes at the known precision.
template <ValuedField F>
bool agrees(const F& a, const F& b) {
  return (a - b).is_zero();
}

template <ValuedField F>
F power(F base, unsigned long n) {
  F acc = F::one(base.context());
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

template <ValuedField F>
F from_int(const typename F::Context& ctx, long n) {
  return F::from_rational(ctx, mpq_class(n));
}

// Lower bound on v(x - x_true) coming from the precision of x itself.
template <ValuedField F>
Valuation precision_valuation(const F& x) {
  auto abs = x.absolute_precision();
  return abs ? Valuation::at_least(*abs) : Valuation::infinite();
}

}  // namespace nadyn::localfield
