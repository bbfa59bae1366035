#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "nadyn/boettcher/boettcher.hpp"
#include "nadyn/localfield/conjugates.hpp"
#include "nadyn/localfield/extension.hpp"

namespace nadyn::arboreal {

using localfield::ExtContext;
using localfield::ExtElement;
using localfield::PrimeBase;
using localfield::Valuation;

template <PrimeBase F>
struct PreimageField {
  ExtContext<F> context;
  ExtElement<F> preimage;  // a root Q of f(Q) = P
};

/// E = K(Q) for a root of f(x) = P, built from y = 1/Q: the reversed
/// polynomial y^d (f(1/y) - P), made monic, must be Eisenstein.
template <PrimeBase F>
PreimageField<F> eisenstein_preimage(const localfield::MonicPoly<F>& f, const F& point) {
  const auto& base = f.context();
  const int d = f.degree();
  const F lead = f.coeff(0) - point;
  if (lead.is_zero()) throw DomainError("f(0) = P: the reversed polynomial drops degree");
  std::vector<F> rev(static_cast<std::size_t>(d + 1), F::zero(base));
  for (int i = 0; i <= d; ++i) {
    const F a = i == 0 ? lead : f.coeff(i);
    rev[static_cast<std::size_t>(d - i)] = a / lead;
  }
  auto field = localfield::ExtensionField<F>::create(base, std::move(rev), localfield::StageKind::eisenstein);
  ExtContext<F> ctx{field};
  return {ctx, ExtElement<F>::one(ctx) / ExtElement<F>::generator(ctx)};
}

struct TransportReport {
  bool passed = false;
  mpq_class precision;   // certified precision of the compared values
  mpq_class tolerance;   // residuals must reach precision - slack
  Valuation preimage_residual;             // v(f(Q) - P)
  Valuation equation_residual;             // v(Omega(Q)^d - Omega(P))
  std::vector<Valuation> conjugate_residuals;  // v(Omega(Q^s) - Omega(Q)^s), matched
};

/// Checks that Omega carries the preimage Q of P to a d-th root of Omega(P)
/// and commutes with every automorphism of E = K(Q):
/// the multisets {Omega(Q^s)} and {Omega(Q)^s} coincide within error bounds.
template <PrimeBase F>
TransportReport transport_check(const boettcher::BoettcherData<F>& b, const ExtElement<F>& q, const F& point,
                                int slack = 2) {
  using E = ExtElement<F>;
  const auto& ctx = q.context();
  const mpq_class working(ctx.working_precision());
  TransportReport report;

  const E p_in_e = E::from_base(ctx, point);
  report.preimage_residual = (b.f(q) - p_in_e).valuation();
  // Capped arithmetic loses a few digits forming f(Q); allow the same slack.
  if (!report.preimage_residual.certainly_ge(working - slack)) {
    throw DomainError("Q is not a preimage of P at the working precision");
  }

  const auto omega_q = boettcher::omega_at(b, q);
  const auto omega_p = boettcher::omega_at(b, p_in_e);
  const auto lhs = omega_q.power(static_cast<unsigned long>(b.f.degree()));
  report.precision = std::min(lhs.error, omega_p.error);

  const auto images = localfield::generator_images(ctx);
  std::vector<E> transported;  // Omega(Q)^s
  std::vector<series::Evaluated<E>> direct;  // Omega(Q^s)
  for (const auto& image : images) {
    transported.push_back(localfield::apply_embedding(omega_q.value, image));
    direct.push_back(boettcher::omega_at(b, localfield::apply_embedding(q, image)));
    report.precision = std::min(report.precision, std::min(omega_q.error, direct.back().error));
  }
  if (images.size() > 2) report.precision = std::min(report.precision, working);
  report.tolerance = report.precision - slack;

  report.equation_residual = (lhs.value - omega_p.value).valuation();
  bool ok = report.equation_residual.certainly_ge(report.tolerance);

  std::vector<bool> used(transported.size(), false);
  for (const auto& value : direct) {
    std::size_t best = transported.size();
    Valuation best_res;
    for (std::size_t k = 0; k < transported.size(); ++k) {
      if (used[k]) continue;
      Valuation r = (value.value - transported[k]).valuation();
      const bool better = best == transported.size() ||
                          (!best_res.is_infinite() && (r.is_infinite() || r.bound() > best_res.bound()));
      if (better) {
        best = k;
        best_res = r;
      }
    }
    used[best] = true;
    report.conjugate_residuals.push_back(best_res);
    ok = ok && best_res.certainly_ge(report.tolerance);
  }
  report.passed = ok;
  return report;
}

}  // namespace nadyn::arboreal
