#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <future>
#include <string>
#include <vector>

#include "nadyn/boettcher/budget.hpp"
#include "nadyn/errors.hpp"
#include "nadyn/localfield/poly.hpp"
#include "nadyn/newton/polygon.hpp"
#include "nadyn/series/evaluate.hpp"
#include "nadyn/series/ops.hpp"

namespace nadyn::boettcher {

using localfield::MonicPoly;
using localfield::Valuation;
using localfield::ValuedField;
using series::DiskSpec;
using series::Evaluated;
using series::TailSeries;

/// v(C_f) = min(0, min_i v(a_i) / (d - i)), so C_f = p^(-v) >= 1.
template <ValuedField F>
mpq_class cf_constant(const MonicPoly<F>& f) {
  const int d = f.degree();
  mpq_class best = 0;
  for (int i = 0; i < d; ++i) {
    const Valuation v = f.coeff(i).valuation();
    if (v.is_infinite()) continue;
    mpq_class q = v.exact() / (d - i);
    q.canonicalize();
    if (q < best) best = q;
  }
  return best;
}

template <ValuedField F>
bool good_reduction(const MonicPoly<F>& f) {
  for (const auto& a : f.lower()) {
    if (!a.valuation().certainly_ge(0)) return false;
  }
  return true;
}

/// Cross-checks a claimed v(C_f) against the Newton polygon of f(z)/z^d as a
/// polynomial in w = 1/z: its roots are the reciprocals of the roots of f, so
/// the smallest root valuation is -v(C_f) when C_f > 1, and no root has
/// negative valuation when C_f = 1.
template <ValuedField F>
bool cf_sup_check(const MonicPoly<F>& f, const mpq_class& claimed) {
  const int d = f.degree();
  std::vector<newton::Point> pts;
  for (int j = 0; j <= d; ++j) {
    const Valuation v = f.coeff(d - j).valuation();
    if (v.is_infinite()) continue;
    pts.push_back(newton::Point{j, v.exact()});
  }
  if (pts.size() < 2) return claimed == 0;
  const auto roots = newton::root_valuations(newton::build_polygon(std::move(pts)));
  const mpq_class largest = *std::max_element(roots.begin(), roots.end());
  if (claimed < 0) return largest == -claimed;
  return claimed == 0 && largest <= 0;
}

template <ValuedField F>
bool cf_sup_check(const MonicPoly<F>& f) {
  return cf_sup_check(f, cf_constant(f));
}

template <ValuedField F>
void require_unit_degree(const MonicPoly<F>& f) {
  const long p = f.context().prime();
  if (f.degree() % p == 0) {
    throw DomainError("degree " + std::to_string(f.degree()) + " is divisible by the residue characteristic " +
                      std::to_string(p));
  }
}

/// The Boettcher coordinate Omega of f, truncated, with its inverse.
template <ValuedField F>
struct BoettcherData {
  MonicPoly<F> f;
  mpq_class cf_valuation;
  bool good_reduction;
  TailSeries<F> omega;
  TailSeries<F> omega_inverse;
  int verified_order;
  DiskSpec domain;
};

/// beta_1, ..., beta_n with beta_N = f^N(z) / z^(d^N), all modulo w^trunc.
///
/// Computed on the series level: with u = w^(d^N) / beta_N = 1/f^N(z),
/// beta_{N+1} = beta_N^d (1 + a_{d-1} u + ... + a_0 u^d).
template <ValuedField F>
std::vector<TailSeries<F>> beta_sequence(const MonicPoly<F>& f, int n, int trunc) {
  const auto& ctx = f.context();
  const int d = f.degree();
  std::vector<F> first(static_cast<std::size_t>(d + 1), F::zero(ctx));
  first[0] = F::one(ctx);
  for (int i = 0; i < d; ++i) first[static_cast<std::size_t>(d - i)] = f.coeff(i);
  std::vector<TailSeries<F>> out{TailSeries<F>::from_coefficients(ctx, first, trunc)};
  long shift = d;
  for (int level = 1; level < n; ++level) {
    const TailSeries<F>& beta = out.back();
    TailSeries<F> u(ctx, trunc);
    if (shift < trunc) {
      u = series::invert_unit(beta).truncated(trunc - static_cast<int>(shift)).shifted(static_cast<int>(shift));
    }
    TailSeries<F> h = TailSeries<F>::from_coefficients(ctx, {f.coeff(0)}, trunc);
    for (int i = 1; i <= d; ++i) {
      h = (h * u).truncated(trunc) + TailSeries<F>::from_coefficients(ctx, {f.coeff(i)}, trunc);
    }
    out.push_back((series::pow(beta, static_cast<unsigned long>(d)) * h).truncated(trunc));
    shift = std::min<long>(shift * d, trunc);
  }
  return out;
}

/// xi_N = beta_N^(1/d^N) with constant term 1, as N successive d-th roots.
template <ValuedField F>
TailSeries<F> xi_from_beta(const TailSeries<F>& beta, int level, int d) {
  TailSeries<F> x = beta;
  for (int k = 0; k < level; ++k) x = series::nth_root(x, d);
  return x;
}

template <ValuedField F>
TailSeries<F> xi_series(const MonicPoly<F>& f, int level, int trunc) {
  require_unit_degree(f);
  return xi_from_beta(beta_sequence(f, level, trunc).back(), level, f.degree());
}

/// First index k at which Omega(f(z)) and Omega(z)^d disagree, reported as
/// the index of the offending Omega coefficient: an error in c_k first shows
/// up at w^(k+d-1) through d c_1^(d-1) c_k. Returns M when the equation
/// holds as far as Omega mod w^M determines it.
template <ValuedField F>
int functional_equation_check(const TailSeries<F>& omega, const MonicPoly<F>& f, int m) {
  if (m > omega.trunc()) throw UsageError("check order exceeds the stored order");
  const int d = f.degree();
  const TailSeries<F> om = omega.truncated(m);
  const TailSeries<F> lhs = series::compose_through_poly(om, f, m + d - 1);
  const TailSeries<F> rhs = series::pow(om, static_cast<unsigned long>(d));
  const int first_bad = series::agreement_order(lhs, rhs);
  return std::clamp(first_bad - (d - 1), 0, m);
}

template <ValuedField F>
int functional_equation_check(const BoettcherData<F>& b, int m) {
  return functional_equation_check(b.omega, b.f, m);
}

/// Agreement of Omega o Omega^{-1} and Omega^{-1} o Omega with w.
template <ValuedField F>
int inverse_check(const TailSeries<F>& omega, const TailSeries<F>& inverse) {
  const auto& ctx = omega.context();
  const int m = std::min(omega.trunc(), inverse.trunc());
  const auto id = TailSeries<F>::monomial(ctx, 1, m);
  return std::min(series::agreement_order(series::compose(omega.truncated(m), inverse.truncated(m)), id),
                  series::agreement_order(series::compose(inverse.truncated(m), omega.truncated(m)), id));
}

/// Smallest valuation of c_k + (k - 1) radius: nonnegative exactly when
/// alpha S(w / alpha) is integral for v(alpha) = -radius.
template <ValuedField F>
Valuation rescaled_min_valuation(const TailSeries<F>& s, const mpq_class& radius) {
  Valuation best = Valuation::infinite();
  for (int k = s.ord(); k < s.trunc(); ++k) {
    Valuation v = s.coeff(k).valuation();
    if (v.is_infinite()) continue;
    Valuation term = v + mpq_class(radius * (k - 1));
    if (best.is_infinite() || term.bound() < best.bound()) best = term;
  }
  return best;
}

template <ValuedField F>
BoettcherData<F> boettcher_series(const MonicPoly<F>& f, int m, const Budget& budget = Budget{}) {
  require_unit_degree(f);
  if (m < 2) throw UsageError("truncation order must be >= 2");
  if (m > budget.max_order) throw BudgetExceeded("budget exceeded: order " + std::to_string(m));
  const auto& ctx = f.context();
  const int d = f.degree();
  int levels = 1;
  for (long reach = d; reach < m; reach *= d) ++levels;

  const TailSeries<F> beta = beta_sequence(f, levels, m).back();
  const TailSeries<F> xi = xi_from_beta(beta, levels, d);
  TailSeries<F> omega = series::invert_unit(xi).shifted(1).truncated(m);
  TailSeries<F> inverse = series::lagrange_invert(omega);
  const mpq_class cf = cf_constant(f);
  BoettcherData<F> out{f,
                       cf,
                       good_reduction(f),
                       std::move(omega),
                       std::move(inverse),
                       0,
                       DiskSpec{DiskSpec::Center::infinity, -cf}};
  out.verified_order = functional_equation_check(out, m);
  (void)ctx;
  return out;
}

/// agreement_order(xi_N, xi_{N+1}) for N = 1..n_max; each is at least d^N.
/// `trunc` defaults to d^(n_max + 1) + 1 so sharper-than-bound agreement shows.
template <ValuedField F>
std::vector<int> cauchy_rate_check(const MonicPoly<F>& f, int n_max, int trunc = -1,
                                   const Budget& budget = Budget{}) {
  require_unit_degree(f);
  const int d = f.degree();
  if (trunc < 0) {
    long t = 1;
    for (int k = 0; k <= n_max; ++k) t *= d;
    if (t + 1 > budget.max_order) throw BudgetExceeded("budget exceeded: Cauchy check order");
    trunc = static_cast<int>(t + 1);
  }
  const auto betas = beta_sequence(f, n_max + 1, trunc);
  std::vector<TailSeries<F>> xis;
  for (int level = 1; level <= n_max + 1; ++level) xis.push_back(xi_from_beta(betas[level - 1], level, d));
  std::vector<int> orders;
  for (int level = 1; level <= n_max; ++level) orders.push_back(series::agreement_order(xis[level - 1], xis[level]));
  return orders;
}

struct EscapeResult {
  enum class Status { escapes, bounded, bounded_so_far };
  Status status;
  // Escape index for `escapes`, iterations examined otherwise.
  int iterations;
};

/// Escape certification: once v(f^n(P)) < v(C_f), |f| = |z|^d keeps the orbit
/// growing. Good reduction decides at n = 0.
template <ValuedField F>
EscapeResult escape_test(const MonicPoly<F>& f, const F& point, int max_iter) {
  using Status = EscapeResult::Status;
  if (good_reduction(f)) {
    const Valuation v = point.valuation();
    if (v.certainly_ge(0)) return {Status::bounded, 0};
    if (v.is_lower_bound()) throw PrecisionError("valuation of the starting point is not known");
    return {Status::escapes, 0};
  }
  const mpq_class cf = cf_constant(f);
  F x = point;
  for (int n = 0;; ++n) {
    const Valuation v = x.valuation();
    if (v.is_finite() && v.bound() < cf) return {Status::escapes, n};
    if (n == max_iter) break;
    x = f(x);
  }
  return {Status::bounded_so_far, max_iter};
}

/// Omega at a point of the certified disk D(inf; 1/C_f), with error bound.
template <ValuedField F, ValuedField G>
Evaluated<G> omega_at(const BoettcherData<F>& b, const G& z) {
  Evaluated<G> r = series::evaluate(b.omega, z, b.domain);
  if (b.good_reduction) {
    const Valuation vz = z.valuation();
    const Valuation vr = r.value.valuation();
    if (vr.is_finite() && vr.bound() < r.error && vr.bound() != -vz.exact()) {
      throw CheckFailure("|Omega(z)| != |z|^-1 under good reduction");
    }
  }
  return r;
}

template <ValuedField F, ValuedField G>
Evaluated<G> omega_inverse_at(const BoettcherData<F>& b, const G& w) {
  DiskSpec disk{DiskSpec::Center::zero, b.domain.radius_exponent};
  return series::evaluate(b.omega_inverse, w, disk);
}

// Evaluations are independent; fan them out.
template <ValuedField F, ValuedField G>
std::vector<Evaluated<G>> omega_at_batch(const BoettcherData<F>& b, const std::vector<G>& points) {
  std::vector<std::future<Evaluated<G>>> jobs;
  jobs.reserve(points.size());
  for (const auto& z : points) {
    jobs.push_back(std::async(std::launch::async, [&b, &z] { return omega_at(b, z); }));
  }
  std::vector<Evaluated<G>> out;
  out.reserve(points.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace nadyn::boettcher
