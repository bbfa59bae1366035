#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nadyn/errors.hpp"
#include "nadyn/localfield/poly.hpp"
#include "nadyn/series/tail_series.hpp"

namespace nadyn::series {

template <ValuedField F>
bool has_unit_constant_term(const TailSeries<F>& a) {
  return a.ord() == 0 && a.trunc() > 0 && localfield::agrees(a.coeff(0), F::one(a.context()));
}

/// 1/a for a = 1 + O(w).
template <ValuedField F>
TailSeries<F> invert_unit(const TailSeries<F>& a) {
  if (!has_unit_constant_term(a)) throw UsageError("invert_unit needs constant term exactly 1");
  const int m = a.trunc();
  const auto& ctx = a.context();
  std::vector<F> in = a.dense();
  std::vector<F> out(static_cast<std::size_t>(m), F::zero(ctx));
  out[0] = F::one(ctx);
  for (int n = 1; n < m; ++n) {
    F acc = F::zero(ctx);
    for (int k = 1; k <= n; ++k) {
      if (in[k].is_zero() && !in[k].absolute_precision()) continue;
      acc = acc + in[k] * out[n - k];
    }
    out[n] = -acc;
  }
  return TailSeries<F>::from_coefficients(ctx, std::move(out), m);
}

template <ValuedField F>
TailSeries<F> pow(TailSeries<F> base, unsigned long n) {
  TailSeries<F> acc = TailSeries<F>::one(base.context(), base.trunc());
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

// Same coefficients, known to a larger order (the extra ones set to zero).
template <ValuedField F>
TailSeries<F> padded(const TailSeries<F>& a, int m) {
  return TailSeries<F>::from_coefficients(a.context(), a.dense(), m);
}

/// The n-th root of a = 1 + O(w) with constant term 1.
///
/// Newton iteration x <- x - (x^n - a) / (n x^(n-1)) from x = 1, doubling the
/// working order each step. Needs n to be a unit, i.e. p does not divide n.
template <ValuedField F>
TailSeries<F> nth_root(const TailSeries<F>& a, long n) {
  const auto& ctx = a.context();
  if (n < 1) throw UsageError("root index must be positive");
  if (n % ctx.prime() == 0) {
    throw DomainError("root not available: residue characteristic " + std::to_string(ctx.prime()) +
                      " divides index " + std::to_string(n));
  }
  if (!has_unit_constant_term(a)) throw UsageError("nth_root needs constant term exactly 1");
  const int target = a.trunc();
  if (n == 1) return a;
  const F inv_n = F::one(ctx) / localfield::from_int<F>(ctx, n);
  TailSeries<F> x = TailSeries<F>::one(ctx, 1);
  int m = 1;
  while (m < target) {
    m = std::min(2 * m, target);
    TailSeries<F> xm = padded(x, m);
    TailSeries<F> lower = pow(xm, static_cast<unsigned long>(n - 1));
    TailSeries<F> residual = lower * xm - a.truncated(m);
    x = (xm - (residual * invert_unit(lower)).scaled(inv_n)).truncated(m);
  }
  return x;
}

template <ValuedField F>
TailSeries<F> derivative(const TailSeries<F>& a) {
  const auto& ctx = a.context();
  std::vector<F> d;
  for (int k = 1; k < a.trunc(); ++k) d.push_back(a.coeff(k) * localfield::from_int<F>(ctx, k));
  return TailSeries<F>::from_coefficients(ctx, std::move(d), std::max(a.trunc() - 1, 0));
}

/// S(T) for ord(T) >= 1, known to the order both inputs justify.
template <ValuedField F>
TailSeries<F> compose(const TailSeries<F>& s, const TailSeries<F>& t) {
  const auto& ctx = s.context();
  const int step = t.ord();
  if (step < 1) throw UsageError("inner series must vanish at w = 0");
  if (t.is_zero()) throw UsageError("inner series is indistinguishable from zero");
  const long out_long = std::min<long>(static_cast<long>(s.trunc()) * step,
                                       t.trunc() + static_cast<long>(std::max(s.ord(), 1) - 1) * step);
  const int out = static_cast<int>(std::min<long>(out_long, INT_MAX / 2));
  std::vector<F> zero(static_cast<std::size_t>(out), F::zero(ctx));
  TailSeries<F> acc = TailSeries<F>::from_coefficients(ctx, zero, out);
  if (s.trunc() > 0 && s.ord() == 0) acc = acc + TailSeries<F>::from_coefficients(ctx, {s.coeff(0)}, out);
  TailSeries<F> tk = t;
  for (int k = 1; k < s.trunc() && static_cast<long>(k) * step < out; ++k) {
    if (k > 1) tk = tk * t;
    const F c = s.coeff(k);
    if (c.is_zero() && !c.absolute_precision()) continue;
    acc = acc + padded(tk.truncated(out), out).scaled(c);
  }
  return acc.truncated(out);
}

/// S(f(z)) expanded in w = 1/z, to `out_trunc` (default: S's own order).
///
/// Uses 1/f(z) = w^d / beta_1 with beta_1 = f(z)/z^d = 1 + a_{d-1} w + ... + a_0 w^d.
template <ValuedField F>
TailSeries<F> compose_through_poly(const TailSeries<F>& s, const localfield::MonicPoly<F>& f, int out_trunc = -1) {
  const auto& ctx = s.context();
  if (!(ctx == f.context())) throw UsageError("series and polynomial over different fields");
  if (s.ord() < 1 && !s.is_zero()) throw UsageError("compose_through_poly needs ord(S) >= 1");
  const int d = f.degree();
  const int out = out_trunc < 0 ? s.trunc() : out_trunc;
  if (static_cast<long>(out) > static_cast<long>(s.trunc()) * d) {
    throw UsageError("requested order exceeds what S determines");
  }
  std::vector<F> beta(static_cast<std::size_t>(d + 1), F::zero(ctx));
  beta[0] = F::one(ctx);
  for (int i = 0; i < d; ++i) beta[static_cast<std::size_t>(d - i)] = f.coeff(i);
  const int inner_trunc = std::max(out - d, 1);
  TailSeries<F> u = invert_unit(TailSeries<F>::from_coefficients(ctx, beta, inner_trunc)).shifted(d);
  return compose(s, u).truncated(out);
}

/// Compositional inverse of S = w + O(w^2).
///
/// Newton iteration B <- B - (S(B) - w) / S'(B); dividing only by the 1-unit
/// S'(B) keeps integral inputs integral.
template <ValuedField F>
TailSeries<F> lagrange_invert(const TailSeries<F>& s) {
  const auto& ctx = s.context();
  if (s.ord() != 1 || !localfield::agrees(s.coeff(1), F::one(ctx))) {
    throw UsageError("lagrange_invert needs S = w + O(w^2)");
  }
  const int target = s.trunc();
  const TailSeries<F> ds = derivative(s);
  TailSeries<F> b = TailSeries<F>::monomial(ctx, 1, std::min(2, target));
  int m = std::min(2, target);
  while (m < target) {
    m = std::min(2 * m, target);
    TailSeries<F> bm = padded(b, m);
    TailSeries<F> residual = compose(s.truncated(m), bm) - TailSeries<F>::monomial(ctx, 1, m);
    TailSeries<F> slope = compose(ds.truncated(m), bm);
    b = (bm - residual * invert_unit(slope)).truncated(m);
  }
  return padded(b, target);
}

/// Smallest k where the coefficients differ, or the common known order.
template <ValuedField F>
int agreement_order(const TailSeries<F>& a, const TailSeries<F>& b) {
  const int m = std::min(a.trunc(), b.trunc());
  for (int k = std::min(a.ord(), b.ord()); k < m; ++k) {
    if (!localfield::agrees(a.coeff(k), b.coeff(k))) return k;
  }
  return m;
}

}  // namespace nadyn::series
