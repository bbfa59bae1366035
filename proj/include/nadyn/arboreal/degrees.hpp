#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "nadyn/arboreal/kummer.hpp"
#include "nadyn/boettcher/boettcher.hpp"
#include "nadyn/localfield/exact.hpp"
#include "nadyn/newton/polygon.hpp"

namespace nadyn::arboreal {

using localfield::ExactQp;
using localfield::MonicPoly;

/// [K(P_n) : K] = d^n, certified when f^n(x) - P has a single Newton
/// segment whose slope has denominator d^n (irreducible, totally ramified).
/// nullopt means "uncertified", never "false".
inline std::optional<long> certify_degree(const MonicPoly<ExactQp>& f, const ExactQp& point, int n,
                                          const Budget& budget = Budget{}) {
  if (n < 1) throw UsageError("level must be >= 1");
  long dn = 1;
  for (int k = 0; k < n; ++k) {
    dn *= f.degree();
    if (dn > budget.max_tree_degree) throw BudgetExceeded("budget exceeded: d^n = " + std::to_string(dn));
  }
  const auto g = f.iterate(n) - localfield::Poly<ExactQp>(f.context(), {point});
  const auto cert = newton::total_ramification_certificate(newton::build_polygon(g));
  if (!cert) return std::nullopt;
  return static_cast<long>(cert->degree);
}

struct DegreeLevel {
  int n;
  long predicted_step;                 // lower bound on [K(P_n) : K(P_{n-1})]
  std::optional<long> certified_degree;  // [K(P_n) : K]
};

struct DegreeChain {
  int d = 0;
  long v_q = 0;  // v(Omega(P))
  std::vector<DegreeLevel> levels;

  // Every certificate equals the product of the predicted steps below it.
  bool consistent() const {
    long product = 1;
    for (const auto& lvl : levels) {
      product *= lvl.predicted_step;
      if (lvl.certified_degree && *lvl.certified_degree != product) return false;
    }
    return true;
  }
};

/// v(Omega(P)). Good reduction with v(P) < 0 gives -v(P) directly; otherwise
/// Omega(P) is evaluated and its valuation must be pinned down by the error
/// bound.
template <localfield::ValuedField F>
long omega_valuation(const boettcher::BoettcherData<F>& b, const F& point) {
  const auto vp = point.valuation();
  if (b.good_reduction) {
    if (vp.certainly_ge(0)) throw DomainError("P lies in the filled Julia set: Omega(P) is undefined");
    const mpq_class v = -vp.exact();
    if (v.get_den() != 1) throw DomainError("v(P) is not an integer");
    return v.get_num().get_si();
  }
  const auto r = boettcher::omega_at(b, point);
  const auto v = r.value.valuation();
  if (!v.is_finite() || v.bound() >= r.error) throw DomainError("v(Omega(P)) is not determined at this precision");
  if (v.bound().get_den() != 1) throw DomainError("v(Omega(P)) is not an integer");
  return v.bound().get_num().get_si();
}

inline DegreeChain degree_chain(const boettcher::BoettcherData<ExactQp>& b, const ExactQp& point, int levels,
                                const Budget& budget = Budget{}) {
  DegreeChain chain;
  chain.d = b.f.degree();
  chain.v_q = omega_valuation(b, point);
  if (chain.v_q == 0) throw DomainError("not applicable: Omega(P) is a unit");
  long dn = 1;
  for (int n = 1; n <= levels; ++n) {
    DegreeLevel lvl{n, predicted_degree_step(chain.v_q, chain.d, n - 1), std::nullopt};
    if (dn <= budget.max_tree_degree) dn *= chain.d;
    if (dn <= budget.max_tree_degree) lvl.certified_degree = certify_degree(b.f, point, n, budget);
    chain.levels.push_back(lvl);
  }
  return chain;
}

}  // namespace nadyn::arboreal
