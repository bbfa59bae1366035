#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <string>

#include "nadyn/errors.hpp"
#include "nadyn/series/tail_series.hpp"

namespace nadyn::series {

using localfield::Valuation;

/// A disk in the w-coordinate: |w| < p^(-radius_exponent), i.e. v(w) > radius.
/// Centered at infinity the point z is sent to w = 1/z, so the disk is
/// D(inf; delta) = {|z| > 1/delta} with delta = p^(-radius_exponent).
struct DiskSpec {
  enum class Center { infinity, zero };
  Center center = Center::infinity;
  mpq_class radius_exponent = 0;

  bool contains_w_valuation(const mpq_class& vw) const { return vw > radius_exponent; }
};

/// max |c_k| r^k on the disk, as a valuation: min_k v(c_k) + k * radius.
template <ValuedField F>
Valuation gauss_norm(const TailSeries<F>& s, const DiskSpec& disk) {
  // A max of coefficient sizes never cancels, so the minimum is exact as soon
  // as an exactly known term attains it.
  std::optional<mpq_class> finite, bound;
  for (int k = s.ord(); k < s.trunc(); ++k) {
    const Valuation v = s.coeff(k).valuation();
    if (v.is_infinite()) continue;
    mpq_class term = v.bound() + disk.radius_exponent * k;
    auto& slot = v.is_finite() ? finite : bound;
    if (!slot || term < *slot) slot = term;
  }
  if (!finite && !bound) return Valuation::infinite();
  if (finite && (!bound || *finite <= *bound)) return Valuation::of(*finite);
  return Valuation::at_least(*bound);
}

/// A value together with the valuation above which it may be wrong:
/// value_true - value has valuation >= error.
template <class G>
struct Evaluated {
  G value;
  mpq_class error;

  // Every residual below error is certified; this is the check used when two
  // routes to the same quantity are compared.
  Valuation residual_against(const Evaluated& other) const { return (value - other.value).valuation(); }
  mpq_class joint_error(const Evaluated& other) const { return std::min(error, other.error); }
  bool matches(const Evaluated& other) const {
    return residual_against(other).certainly_ge(joint_error(other));
  }

  // x^n with the error propagated through (a + e)^n - a^n.
  Evaluated power(unsigned long n) const {
    G acc = G::one(value.context());
    for (unsigned long k = 0; k < n; ++k) acc = acc * value;
    Valuation v0 = value.valuation();
    mpq_class err;
    if (v0.is_infinite()) {
      err = error * static_cast<long>(n);
    } else {
      const mpq_class base = v0.bound();
      err = mpq_class(base * static_cast<long>(n - 1)) + error;
      for (unsigned long j = 2; j <= n; ++j) {
        mpq_class t = mpq_class(base * static_cast<long>(n - j)) + mpq_class(error * static_cast<long>(j));
        err = std::min(err, t);
      }
    }
    auto abs = acc.absolute_precision();
    if (abs) err = std::min(err, *abs);
    return Evaluated{acc, err};
  }
};

/// Sum of c_k w0^k for k < trunc with a certified tail bound.
///
/// The series must be bounded on the disk in the rescaled sense: with
/// v(alpha) = -radius, alpha S(w/alpha) has integral coefficients, i.e.
/// v(c_k) >= -(k-1) radius. This is checked on the stored coefficients and
/// assumed for the unknown tail, whose terms then have valuation at least
/// k (v(w0) - radius) + radius, increasing in k.
template <ValuedField F, ValuedField G>
Evaluated<G> evaluate(const TailSeries<F>& s, const G& point, const DiskSpec& disk) {
  const auto& gctx = point.context();
  G w0 = point;
  if (disk.center == DiskSpec::Center::infinity) {
    if (point.is_zero()) throw DomainError("outside certified domain: z = 0");
    w0 = G::one(gctx) / point;
  }
  const Valuation vw = w0.valuation();
  if (vw.is_lower_bound()) throw PrecisionError("valuation of the evaluation point is not known exactly");
  if (vw.is_infinite()) throw DomainError("evaluation at the center of the disk: use the constant term");
  if (!disk.contains_w_valuation(vw.bound())) {
    throw DomainError("outside certified domain: v(w) = " + vw.to_string() + " but the disk needs v(w) > " +
                      localfield::rational_string(disk.radius_exponent));
  }
  const mpq_class& radius = disk.radius_exponent;
  for (int k = s.ord(); k < s.trunc(); ++k) {
    Valuation v = s.coeff(k).valuation();
    if (v.is_infinite() || v.is_lower_bound()) continue;
    if (v.bound() < -(k - 1) * radius) {
      throw DomainError("coefficient " + std::to_string(k) + " is not bounded on the disk");
    }
  }
  G acc = G::zero(gctx);
  for (int k = s.trunc(); k-- > 0;) acc = acc * w0 + embed(s.coeff(k), gctx);
  const long m = s.trunc();
  mpq_class err = mpq_class(m * (vw.bound() - radius)) + radius;
  auto abs = acc.absolute_precision();
  if (abs) err = std::min(err, *abs);
  return Evaluated<G>{acc, err};
}

}  // namespace nadyn::series
