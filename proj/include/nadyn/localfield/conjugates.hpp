#pragma once

#include <concepts>
#include <vector>

#include "nadyn/errors.hpp"
#include "nadyn/localfield/context.hpp"
#include "nadyn/localfield/extension.hpp"
#include "nadyn/localfield/hensel.hpp"

namespace nadyn::localfield {

template <class B>
concept PrimeBase = ValuedField<B> && std::same_as<typename B::Context, PrimeContext>;

/// Image of `a` under the automorphism sending the generator to `image`.
template <PrimeBase B>
ExtElement<B> apply_embedding(const ExtElement<B>& a, const ExtElement<B>& image) {
  const auto& ctx = a.context();
  ExtElement<B> acc = ExtElement<B>::zero(ctx);
  const auto& c = a.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image + ExtElement<B>::from_base(ctx, *it);
  return acc;
}

/// All roots in E of E's defining polynomial, the generator first.
///
/// Quadratics are closed form (the second root is -g_1 - x). Higher degrees
/// search integral starting points digit by digit in the uniformizer and
/// Hensel-lift them to the working precision.
template <PrimeBase B>
std::vector<ExtElement<B>> generator_images(const ExtContext<B>& ctx) {
  using E = ExtElement<B>;
  const auto& field = *ctx.field;
  const int n = field.degree();
  if (n > 4) throw UsageError("conjugates are only enumerated for degree <= 4");
  const Poly<B> g(field.base(), field.defining());
  std::vector<E> roots{E::generator(ctx)};
  if (n == 1) return roots;
  if (n == 2) {
    roots.push_back(E::from_base(ctx, -field.defining()[1]) - roots[0]);
    return roots;
  }

  const mpq_class target(ctx.working_precision());
  const long p = ctx.prime();
  std::vector<E> reps;
  if (field.kind() == StageKind::eisenstein) {
    for (long r = 0; r < p; ++r) reps.push_back(E::from_rational(ctx, r));
  } else {
    std::vector<long> digits(static_cast<std::size_t>(n), 0);
    const E x = E::generator(ctx);
    for (;;) {
      E acc = E::zero(ctx);
      for (int j = n; j-- > 0;) acc = acc * x + E::from_rational(ctx, digits[static_cast<std::size_t>(j)]);
      reps.push_back(acc);
      int k = 0;
      while (k < n && ++digits[static_cast<std::size_t>(k)] == p) digits[static_cast<std::size_t>(k++)] = 0;
      if (k == n) break;
    }
  }
  const E uniformizer = field.kind() == StageKind::eisenstein ? E::generator(ctx) : E::from_rational(ctx, p);
  const Poly<B> dg = g.derivative();

  auto is_new = [&](const E& r) {
    for (const auto& s : roots) {
      const Valuation sep = dg(s).valuation();
      if ((r - s).valuation().certainly_ge(sep.bound() + mpq_class(1, 2 * field.ramification()))) return false;
    }
    return true;
  };

  constexpr std::size_t kMaxCandidates = 200000;
  std::size_t width = 1;
  for (int depth = 1; depth <= 2 * n + 2; ++depth) {
    if (width > kMaxCandidates / reps.size()) break;
    width *= reps.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(depth), 0);
    for (std::size_t count = 0; count < width; ++count) {
      E cand = E::zero(ctx);
      for (std::size_t k = idx.size(); k-- > 0;) cand = cand * uniformizer + reps[idx[k]];
      for (std::size_t k = 0; k < idx.size() && ++idx[k] == reps.size(); ++k) idx[k] = 0;
      E root;
      try {
        root = hensel_lift(g, cand, target);
      } catch (const DomainError&) {
        continue;
      }
      if (is_new(root)) {
        roots.push_back(root);
        if (static_cast<int>(roots.size()) == n) return roots;
      }
    }
  }
  throw DomainError("non-normal extension: defining polynomial does not split in E");
}

/// Images of `a` under every automorphism of its (single-stage) field over
/// the base, in the order of generator_images.
template <PrimeBase B>
std::vector<ExtElement<B>> conjugates(const ExtElement<B>& a) {
  std::vector<ExtElement<B>> out;
  for (const auto& image : generator_images(a.context())) out.push_back(apply_embedding(a, image));
  return out;
}

}  // namespace nadyn::localfield
