#pragma once

#include <gmpxx.h>

#include <stdexcept>

#include "nadyn/errors.hpp"
#include "nadyn/localfield/poly.hpp"

namespace nadyn::localfield {

/// Newton refinement of a simple root of g starting from x0, until
/// v(g(x)) >= target. x may live in an extension of g's coefficient field.
///
/// Requires v(g(x0)) > 2 v(g'(x0)); under that condition every step keeps
/// x congruent to x0 and doubles the number of correct digits.
template <ValuedField F, ValuedField G>
G hensel_lift(const Poly<F>& g, G x, const mpq_class& target, int max_iterations = 64) {
  const Poly<F> dg = g.derivative();
  G gx = g(x);
  if (gx.valuation().certainly_ge(target)) return x;
  const Valuation vd = dg(x).valuation();
  if (!vd.is_finite()) throw DomainError("not a simple root at this precision: derivative vanishes");
  if (!(gx.valuation().bound() > 2 * vd.exact())) {
    throw DomainError("not a simple root at this precision: v(g(x0)) <= 2 v(g'(x0))");
  }
  for (int it = 0; it < max_iterations; ++it) {
    x = x - gx / dg(x);
    gx = g(x);
    Valuation v = gx.valuation();
    if (v.certainly_ge(target)) return x;
    if (v.is_lower_bound()) throw PrecisionError("target precision exceeds the working precision");
  }
  throw std::logic_error("Hensel iteration did not converge within its budget");
}

template <ValuedField F, ValuedField G>
G hensel_lift(const Poly<F>& g, G x, long target) {
  return hensel_lift(g, std::move(x), mpq_class(target));
}

}  // namespace nadyn::localfield
