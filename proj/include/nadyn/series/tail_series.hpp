#pragma once

#include <algorithm>
#include <climits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nadyn/errors.hpp"
#include "nadyn/localfield/field.hpp"

namespace nadyn::series {

using localfield::ValuedField;

/// A power series in w = 1/z known modulo w^trunc.
///
/// Stores c_ord, ..., c_{trunc-1}; ord is the index of the first nonzero
/// coefficient, or trunc when every known coefficient vanishes.
template <ValuedField F>
class TailSeries {
 public:
  using Field = F;
  using Context = typename F::Context;

  TailSeries(Context ctx, int trunc) : ctx_(std::move(ctx)), ord_(trunc), trunc_(trunc) {
    if (trunc < 0) throw UsageError("negative truncation order");
  }

  // Coefficients c_0, c_1, ... (any length); entries at or beyond trunc are
  // dropped, missing ones are zero.
  static TailSeries from_coefficients(const Context& ctx, std::vector<F> dense, int trunc) {
    TailSeries s(ctx, trunc);
    dense.resize(static_cast<std::size_t>(trunc), F::zero(ctx));
    s.ord_ = 0;
    s.c_ = std::move(dense);
    s.normalize();
    return s;
  }

  static TailSeries from_rationals(const Context& ctx, const std::vector<mpq_class>& dense, int trunc) {
    std::vector<F> c;
    for (const auto& q : dense) c.push_back(F::from_rational(ctx, q));
    return from_coefficients(ctx, std::move(c), trunc);
  }

  static TailSeries monomial(const Context& ctx, int k, int trunc) {
    std::vector<F> c(static_cast<std::size_t>(std::max(k + 1, 0)), F::zero(ctx));
    if (k < trunc) c[static_cast<std::size_t>(k)] = F::one(ctx);
    return from_coefficients(ctx, std::move(c), trunc);
  }

  static TailSeries one(const Context& ctx, int trunc) { return monomial(ctx, 0, trunc); }

  const Context& context() const { return ctx_; }
  int ord() const { return ord_; }
  int trunc() const { return trunc_; }
  bool is_zero() const { return ord_ >= trunc_; }

  // c_k for k < trunc.
  F coeff(int k) const {
    if (k >= trunc_) throw UsageError("coefficient " + std::to_string(k) + " beyond truncation order");
    if (k < ord_) return F::zero(ctx_);
    return c_[static_cast<std::size_t>(k - ord_)];
  }
  std::span<const F> stored() const { return c_; }
  // c_0, ..., c_{trunc-1}
  std::vector<F> dense() const {
    std::vector<F> d(static_cast<std::size_t>(ord_), F::zero(ctx_));
    d.insert(d.end(), c_.begin(), c_.end());
    return d;
  }

  TailSeries truncated(int m) const {
    if (m >= trunc_) return *this;
    TailSeries s = *this;
    s.trunc_ = std::max(m, 0);
    if (s.ord_ >= s.trunc_) {
      s.ord_ = s.trunc_;
      s.c_.clear();
    } else {
      s.c_.resize(static_cast<std::size_t>(s.trunc_ - s.ord_));
    }
    return s;
  }

  // Multiplication by w^k.
  TailSeries shifted(int k) const {
    TailSeries s = *this;
    s.ord_ += k;
    s.trunc_ += k;
    return s;
  }

  TailSeries scaled(const F& a) const {
    std::vector<F> d = dense();
    for (auto& x : d) x = x * a;
    return from_coefficients(ctx_, std::move(d), trunc_);
  }

  // Replace one coefficient (test harnesses inject corruptions with this).
  TailSeries with_coeff(int k, const F& value) const {
    std::vector<F> d = dense();
    d.at(static_cast<std::size_t>(k)) = value;
    return from_coefficients(ctx_, std::move(d), trunc_);
  }

  TailSeries operator-() const { return scaled(F::from_rational(ctx_, -1)); }

  friend TailSeries operator+(const TailSeries& a, const TailSeries& b) {
    require_same(a, b);
    const int m = std::min(a.trunc_, b.trunc_);
    std::vector<F> d(static_cast<std::size_t>(m), F::zero(a.ctx_));
    for (int k = a.ord_; k < m; ++k) d[k] = d[k] + a.c_[k - a.ord_];
    for (int k = b.ord_; k < m; ++k) d[k] = d[k] + b.c_[k - b.ord_];
    return from_coefficients(a.ctx_, std::move(d), m);
  }
  friend TailSeries operator-(const TailSeries& a, const TailSeries& b) { return a + (-b); }

  // ord = ord_a + ord_b; known modulo w^min(M_a + ord_b, M_b + ord_a).
  friend TailSeries operator*(const TailSeries& a, const TailSeries& b) {
    require_same(a, b);
    const int m = std::min(a.trunc_ + b.ord_, b.trunc_ + a.ord_);
    const int lo = a.ord_ + b.ord_;
    if (lo >= m) return TailSeries(a.ctx_, m);
    std::vector<F> d(static_cast<std::size_t>(m), F::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const int ki = a.ord_ + static_cast<int>(i);
      if (ki + b.ord_ >= m) break;
      if (a.c_[i].is_zero() && !a.c_[i].absolute_precision()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        const int k = ki + b.ord_ + static_cast<int>(j);
        if (k >= m) break;
        d[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k)] + a.c_[i] * b.c_[j];
      }
    }
    return from_coefficients(a.ctx_, std::move(d), m);
  }

 private:
  static void require_same(const TailSeries& a, const TailSeries& b) {
    if (!(a.ctx_ == b.ctx_)) throw UsageError("series over different fields");
  }

  // Leading coefficients that vanish (exactly or to their precision) are
  // absorbed into ord.
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    ord_ += static_cast<int>(lead);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    if (ord_ >= trunc_) {
      ord_ = trunc_;
      c_.clear();
    }
  }

  Context ctx_;
  int ord_;
  int trunc_;
  std::vector<F> c_;
};

}  // namespace nadyn::series
