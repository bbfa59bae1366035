#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "nadyn/errors.hpp"
#include "nadyn/localfield/field.hpp"

namespace nadyn::localfield {

/// Dense univariate polynomial, coefficients low to high.
template <ValuedField F>
class Poly {
 public:
  using Context = typename F::Context;

  explicit Poly(Context ctx) : ctx_(std::move(ctx)) {}
  Poly(Context ctx, std::vector<F> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

  static Poly from_rationals(const Context& ctx, const std::vector<mpq_class>& coeffs) {
    std::vector<F> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.push_back(F::from_rational(ctx, q));
    return Poly(ctx, std::move(c));
  }

  const Context& context() const { return ctx_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coefficients() const { return c_; }
  F coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[i] : F::zero(ctx_); }

  // Horner evaluation at a point of F or of an extension of F.
  template <class G>
  G operator()(const G& x) const {
    const auto& gctx = x.context();
    G acc = G::zero(gctx);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it, gctx);
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * from_int<F>(ctx_, i));
    return Poly(ctx_, std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(a.ctx_, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(F::from_rational(b.ctx_, -1)); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly(a.ctx_);
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(a.ctx_, std::move(c));
  }

  Poly scaled(const F& s) const {
    std::vector<F> c;
    for (const auto& x : c_) c.push_back(x * s);
    return Poly(ctx_, std::move(c));
  }

  // Substitution p(q(x)).
  Poly compose(const Poly& inner) const {
    Poly acc(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(ctx_, {*it});
    return acc;
  }

 private:
  // Only exact zeros are dropped: a coefficient known only modulo p^A is kept
  // so the degree never silently shrinks.
  void trim() {
    while (!c_.empty() && c_.back().is_zero() && !c_.back().absolute_precision()) c_.pop_back();
  }

  Context ctx_;
  std::vector<F> c_;
};

/// Monic polynomial z^d + a_{d-1} z^{d-1} + ... + a_0 with d >= 2.
template <ValuedField F>
class MonicPoly {
 public:
  using Context = typename F::Context;

  // `lower` holds a_0, ..., a_{d-1}.
  MonicPoly(Context ctx, std::vector<F> lower) : ctx_(std::move(ctx)), a_(std::move(lower)) {
    if (a_.size() < 2) throw UsageError("monic polynomial must have degree >= 2");
  }

  // Coefficients a_0, ..., a_d; a_d must be exactly 1.
  static MonicPoly from_rationals(const Context& ctx, std::vector<mpq_class> all) {
    if (all.empty() || all.back() != 1) throw UsageError("polynomial is not monic");
    all.pop_back();
    std::vector<F> lower;
    for (const auto& q : all) lower.push_back(F::from_rational(ctx, q));
    return MonicPoly(ctx, std::move(lower));
  }

  const Context& context() const { return ctx_; }
  int degree() const { return static_cast<int>(a_.size()); }
  const std::vector<F>& lower() const { return a_; }
  F coeff(int i) const { return i == degree() ? F::one(ctx_) : a_.at(static_cast<std::size_t>(i)); }

  Poly<F> as_poly() const {
    std::vector<F> c = a_;
    c.push_back(F::one(ctx_));
    return Poly<F>(ctx_, std::move(c));
  }

  template <class G>
  G operator()(const G& x) const {
    const auto& gctx = x.context();
    G acc = G::one(gctx);
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) acc = acc * x + embed(*it, gctx);
    return acc;
  }

  // f composed with itself n times, expanded (n >= 1).
  Poly<F> iterate(int n) const {
    Poly<F> base = as_poly();
    Poly<F> acc = base;
    for (int k = 1; k < n; ++k) acc = base.compose(acc);
    return acc;
  }

 private:
  Context ctx_;
  std::vector<F> a_;
};

}  // namespace nadyn::localfield
