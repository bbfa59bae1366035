#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nadyn/errors.hpp"
#include "nadyn/localfield/field.hpp"
#include "nadyn/localfield/fp_poly.hpp"

namespace nadyn::localfield {

enum class StageKind { eisenstein, unramified };

template <ValuedField B>
class ExtensionField;

template <ValuedField B>
struct ExtContext {
  std::shared_ptr<const ExtensionField<B>> field;

  long prime() const { return field->base().prime(); }
  int working_precision() const { return field->base().working_precision(); }
  int ramification() const { return field->ramification(); }
  int residue_degree() const { return field->residue_degree(); }

  friend bool operator==(const ExtContext& a, const ExtContext& b) { return a.field == b.field; }
};

namespace detail {

template <ValuedField B>
mpq_class pivot_key(const B& x) {
  return x.valuation().bound();
}

// Gaussian elimination with minimal-valuation pivots. Solves m * x = rhs when
// `rhs` is given; always returns the determinant.
template <ValuedField B>
B eliminate(std::vector<std::vector<B>> m, std::vector<B>* rhs, const typename B::Context& ctx) {
  const std::size_t n = m.size();
  B det = B::one(ctx);
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = col; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      if (!best || pivot_key(m[r][col]) < pivot_key(m[*best][col])) best = r;
    }
    if (!best) {
      if (rhs) throw PrecisionError("insufficient precision: singular multiplication matrix");
      return B::zero(ctx);
    }
    if (*best != col) {
      std::swap(m[*best], m[col]);
      if (rhs) std::swap((*rhs)[*best], (*rhs)[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      B factor = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] = m[r][k] - factor * m[col][k];
      if (rhs) (*rhs)[r] = (*rhs)[r] - factor * (*rhs)[col];
    }
  }
  if (rhs) {
    for (std::size_t i = n; i-- > 0;) {
      B acc = (*rhs)[i];
      for (std::size_t k = i + 1; k < n; ++k) acc = acc - m[i][k] * (*rhs)[k];
      (*rhs)[i] = acc / m[i][i];
    }
  }
  return det;
}

}  // namespace detail

/// One explicit stage K[x]/(g) over a base field K, with g Eisenstein or
/// irreducible modulo the maximal ideal. Stages nest: ExtensionField of an
/// ExtElement type is a tower.
template <ValuedField B>
class ExtensionField {
 public:
  using BaseContext = typename B::Context;
  static constexpr int kMaxTotalDegree = 8;

  // `monic` holds g_0, ..., g_n with g_n = 1.
  static std::shared_ptr<const ExtensionField> create(const BaseContext& base, std::vector<B> monic,
                                                      StageKind kind) {
    if (monic.size() < 2) throw UsageError("defining polynomial must have degree >= 1");
    if (!agrees(monic.back(), B::one(base))) throw UsageError("defining polynomial must be monic");
    const int n = static_cast<int>(monic.size()) - 1;
    const int e_base = base.ramification();
    const int f_base = base.residue_degree();
    int e = e_base, f = f_base;
    if (kind == StageKind::eisenstein) {
      mpq_class unit_val(1, e_base);
      for (int i = 0; i < n; ++i) {
        if (!monic[i].valuation().certainly_ge(unit_val)) {
          throw UsageError("not Eisenstein: coefficient " + std::to_string(i) + " has valuation below the uniformizer");
        }
      }
      if (monic[0].is_zero() || monic[0].valuation().exact() != unit_val) {
        throw UsageError("not Eisenstein: constant term is not a uniformizer");
      }
      e *= n;
    } else {
      if (f_base != 1) throw UsageError("unramified stages need residue field F_p below them");
      std::vector<long> reduced;
      for (const auto& c : monic) {
        if (!c.valuation().certainly_ge(0)) throw UsageError("unramified stage needs integral coefficients");
        reduced.push_back(c.residue());
      }
      if (!irreducible_mod_p(reduced, base.prime())) {
        throw UsageError("defining polynomial is not irreducible modulo p");
      }
      f *= n;
    }
    if (e * f > kMaxTotalDegree) throw UsageError("extension tower exceeds total degree 8");
    return std::shared_ptr<const ExtensionField>(new ExtensionField(base, std::move(monic), kind, e, f));
  }

  static std::shared_ptr<const ExtensionField> create(const BaseContext& base,
                                                      const std::vector<mpq_class>& monic, StageKind kind) {
    std::vector<B> c;
    for (const auto& q : monic) c.push_back(B::from_rational(base, q));
    return create(base, std::move(c), kind);
  }

  const BaseContext& base() const { return base_; }
  int degree() const { return static_cast<int>(g_.size()) - 1; }
  StageKind kind() const { return kind_; }
  int ramification() const { return e_; }
  int residue_degree() const { return f_; }
  const std::vector<B>& defining() const { return g_; }

  // Valuation of the generator: 1/e for Eisenstein stages, 0 otherwise.
  mpq_class generator_valuation() const {
    return kind_ == StageKind::eisenstein ? mpq_class(1, e_) : mpq_class(0);
  }

 private:
  ExtensionField(BaseContext base, std::vector<B> g, StageKind kind, int e, int f)
      : base_(std::move(base)), g_(std::move(g)), kind_(kind), e_(e), f_(f) {}

  BaseContext base_;
  std::vector<B> g_;
  StageKind kind_;
  int e_;
  int f_;
};

template <ValuedField B>
ExtContext<B> context_of(const std::shared_ptr<const ExtensionField<B>>& field) {
  return ExtContext<B>{field};
}

/// Element sum c_i x^i of an ExtensionField, i < degree.
template <ValuedField B>
class ExtElement {
 public:
  using Context = ExtContext<B>;
  using Base = B;

  ExtElement() = default;
  ExtElement(Context ctx, std::vector<B> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != ctx_.field->degree()) throw UsageError("coefficient vector has wrong length");
  }

  static ExtElement zero(const Context& ctx) {
    return ExtElement(ctx, std::vector<B>(ctx.field->degree(), B::zero(ctx.field->base())));
  }
  static ExtElement one(const Context& ctx) { return from_base(ctx, B::one(ctx.field->base())); }
  static ExtElement from_rational(const Context& ctx, const mpq_class& q) {
    return from_base(ctx, B::from_rational(ctx.field->base(), q));
  }
  static ExtElement from_base(const Context& ctx, const B& b) {
    ExtElement r = zero(ctx);
    r.c_[0] = b;
    return r;
  }
  static ExtElement generator(const Context& ctx) {
    if (ctx.field->degree() == 1) return from_base(ctx, -ctx.field->defining()[0]);
    ExtElement r = zero(ctx);
    r.c_[1] = B::one(ctx.field->base());
    return r;
  }

  const Context& context() const { return ctx_; }
  const std::vector<B>& coefficients() const { return c_; }
  const ExtensionField<B>& field() const { return *ctx_.field; }

  bool is_zero() const {
    for (const auto& c : c_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  // min_i v(c_i) + i v(x); the minimum is attained once for Eisenstein
  // stages and the residues of the minimal terms are independent for
  // unramified ones, so a finite minimum is always exact.
  Valuation valuation() const {
    const mpq_class step = ctx_.field->generator_valuation();
    std::optional<mpq_class> finite, bound;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      Valuation v = c_[i].valuation();
      if (v.is_infinite()) continue;
      mpq_class t = v.bound() + step * static_cast<long>(i);
      auto& slot = v.is_finite() ? finite : bound;
      if (!slot || t < *slot) slot = t;
    }
    if (!finite && !bound) return Valuation::infinite();
    if (finite && (!bound || *finite < *bound)) return Valuation::of(*finite);
    mpq_class b = bound ? *bound : *finite;
    if (finite && *finite < b) b = *finite;
    return Valuation::at_least(b);
  }

  std::optional<mpq_class> absolute_precision() const {
    const mpq_class step = ctx_.field->generator_valuation();
    std::optional<mpq_class> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      auto a = c_[i].absolute_precision();
      if (!a) continue;
      mpq_class t = *a + step * static_cast<long>(i);
      if (!out || t < *out) out = t;
    }
    return out;
  }

  long residue() const {
    if (ctx_.field->residue_degree() != 1) throw DomainError("residue field is not F_p");
    if (!valuation().certainly_ge(0)) throw DomainError("residue of a non-integral element");
    return c_[0].residue();
  }

  ExtElement operator-() const {
    ExtElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    require_same(a, b);
    ExtElement r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }

  friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    require_same(a, b);
    const auto& g = a.ctx_.field->defining();
    const std::size_t n = a.c_.size();
    const auto& base = a.ctx_.field->base();
    std::vector<B> prod(2 * n - 1, B::zero(base));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i].is_zero() && !a.c_[i].absolute_precision()) continue;
      for (std::size_t j = 0; j < n; ++j) prod[i + j] = prod[i + j] + a.c_[i] * b.c_[j];
    }
    for (std::size_t k = prod.size(); k-- > n;) {
      const B top = prod[k];
      if (top.is_zero() && !top.absolute_precision()) continue;
      for (std::size_t i = 0; i < n; ++i) prod[k - n + i] = prod[k - n + i] - top * g[i];
    }
    prod.resize(n, B::zero(base));
    return ExtElement(a.ctx_, std::move(prod));
  }

  friend ExtElement operator/(const ExtElement& a, const ExtElement& b) { return a * b.inverse(); }

  ExtElement& operator+=(const ExtElement& o) { return *this = *this + o; }
  ExtElement& operator-=(const ExtElement& o) { return *this = *this - o; }
  ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }

  ExtElement inverse() const {
    if (is_zero()) throw PrecisionError("insufficient precision: division by an element indistinguishable from zero");
    const auto& base = ctx_.field->base();
    auto m = multiplication_matrix();
    std::vector<B> rhs(c_.size(), B::zero(base));
    rhs[0] = B::one(base);
    detail::eliminate(std::move(m), &rhs, base);
    return ExtElement(ctx_, std::move(rhs));
  }

  // Determinant of multiplication by this element.
  B norm() const { return detail::eliminate<B>(multiplication_matrix(), nullptr, ctx_.field->base()); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero() && !c_[i].absolute_precision()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].to_string() + ")";
      if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static void require_same(const ExtElement& a, const ExtElement& b) {
    if (!(a.ctx_ == b.ctx_)) throw UsageError("operands live in different fields");
  }

  // Row i, column j: coefficient of x^i in this * x^j.
  std::vector<std::vector<B>> multiplication_matrix() const {
    const std::size_t n = c_.size();
    std::vector<std::vector<B>> m(n, std::vector<B>(n));
    ExtElement col = *this;
    const ExtElement x = generator(ctx_);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
      if (j + 1 < n) col = col * x;
    }
    return m;
  }

  Context ctx_;
  std::vector<B> c_;
};

template <ValuedField B>
ExtElement<B> embed(const B& x, const ExtContext<B>& ctx) {
  return ExtElement<B>::from_base(ctx, x);
}

}  // namespace nadyn::localfield
