#include <random>
#include <vector>

#include "doctest.h"
#include "nadyn/errors.hpp"
#include "nadyn/localfield/exact.hpp"
#include "nadyn/localfield/padic.hpp"
#include "nadyn/localfield/poly.hpp"
#include "nadyn/series/evaluate.hpp"
#include "nadyn/series/ops.hpp"
#include "nadyn/series/tail_series.hpp"
#include "support/generators.hpp"

using namespace nadyn;
using localfield::ExactQp;
using localfield::MonicPoly;
using localfield::Padic;
using localfield::PrimeContext;
using localfield::Valuation;
using series::DiskSpec;
using series::TailSeries;

namespace {

using S = TailSeries<ExactQp>;

S rat(const PrimeContext& ctx, std::vector<mpq_class> c, int m) { return S::from_rationals(ctx, c, m); }

void check_coeffs(const S& s, const std::vector<mpq_class>& want) {
  for (std::size_t k = 0; k < want.size(); ++k) {
    CAPTURE(k);
    CHECK(s.coeff(static_cast<int>(k)).value() == want[k]);
  }
}

S random_series(std::mt19937_64& rng, const PrimeContext& ctx, int m, int ord, bool integral) {
  std::vector<mpq_class> c(static_cast<std::size_t>(m), 0);
  for (int k = ord; k < m; ++k) {
    c[static_cast<std::size_t>(k)] =
        integral ? testing::random_integral(rng, ctx.p) : testing::random_rational(rng, ctx.p, 1);
  }
  return rat(ctx, c, m);
}

S random_unit(std::mt19937_64& rng, const PrimeContext& ctx, int m, bool integral = false) {
  S s = random_series(rng, ctx, m, 1, integral);
  return s + S::one(ctx, m);
}

// Lagrange coefficient formula: [w^n] S^{-1} = (1/n) [w^{n-1}] (w/S)^n.
S lagrange_oracle(const S& s) {
  const auto& ctx = s.context();
  int m = s.trunc();
  S unit = s.shifted(-1);  // S / w
  S inv = series::invert_unit(unit);
  std::vector<mpq_class> out(static_cast<std::size_t>(m), 0);
  for (int n = 1; n < m; ++n) {
    S pw = series::pow(inv, static_cast<unsigned long>(n));
    out[static_cast<std::size_t>(n)] = pw.coeff(n - 1).value() / n;
  }
  return rat(ctx, out, m);
}

}  // namespace

TEST_CASE("series arithmetic truncation rules") {
  PrimeContext ctx{5, 30};
  S a = rat(ctx, {0, 1, 2}, 6);
  S b = rat(ctx, {0, 0, 1}, 4);
  CHECK((a + b).trunc() == 4);
  S prod = a * b;
  CHECK(prod.ord() == 3);
  CHECK(prod.trunc() == std::min(6 + 2, 4 + 1));
  check_coeffs(prod, {0, 0, 0, 1, 2});
  CHECK_THROWS_AS(a.coeff(6), UsageError);
  CHECK_THROWS_AS(a + S::one(PrimeContext{7, 30}, 6), UsageError);
}

TEST_CASE("series_inv examples") {
  PrimeContext ctx{5, 30};
  mpq_class c = 3;
  S a = rat(ctx, {1, 0, c / 2, 0, c / 4 - c * c / 8}, 6);
  check_coeffs(series::invert_unit(a), {1, 0, -c / 2, 0, 3 * c * c / 8 - c / 4});
  check_coeffs(series::invert_unit(rat(ctx, {1, -1}, 6)), {1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(series::invert_unit(rat(ctx, {5, 1}, 6)), UsageError);
  CHECK_THROWS_AS(series::invert_unit(rat(ctx, {0, 1}, 6)), UsageError);
}

TEST_CASE("series_nth_root examples") {
  PrimeContext ctx{5, 30};
  mpq_class c = 7;
  S root = series::nth_root(rat(ctx, {1, 0, c}, 6), 2);
  check_coeffs(root, {1, 0, c / 2, 0, -c * c / 8});
  CHECK(root.trunc() == 6);
  CHECK_THROWS_AS(series::nth_root(rat(ctx, {1, 1}, 6), 5), DomainError);
  CHECK_THROWS_AS(series::nth_root(rat(ctx, {2, 1}, 6), 2), UsageError);
}

TEST_CASE("compose_through_poly examples") {
  PrimeContext ctx{5, 30};
  S w = S::monomial(ctx, 1, 8);
  auto zd = MonicPoly<ExactQp>::from_rationals(ctx, {0, 0, 0, 1});
  check_coeffs(series::compose_through_poly(w, zd), {0, 0, 0, 1});
  mpq_class c = 3;
  auto f = MonicPoly<ExactQp>::from_rationals(ctx, {c, 0, 1});
  S fw = series::compose_through_poly(w, f);
  check_coeffs(fw, {0, 0, 1, 0, -c, 0, c * c, 0});
  CHECK_THROWS_AS(series::compose_through_poly(w, f, 17), UsageError);
}

TEST_CASE("lagrange_invert examples") {
  PrimeContext ctx{5, 30};
  S w = S::monomial(ctx, 1, 9);
  check_coeffs(series::lagrange_invert(w), {0, 1, 0, 0, 0, 0, 0, 0, 0});
  for (mpq_class c : {mpq_class(3), mpq_class(-1), mpq_class(2, 5)}) {
    S om = rat(ctx, {0, 1, 0, -c / 2, 0, 3 * c * c / 8 - c / 4}, 7);
    check_coeffs(series::lagrange_invert(om), {0, 1, 0, c / 2, 0, 3 * c * c / 8 + c / 4});
  }
  check_coeffs(series::lagrange_invert(rat(ctx, {0, 1, 1}, 6)), {0, 1, -1, 2, -5, 14});
  CHECK_THROWS_AS(series::lagrange_invert(rat(ctx, {0, 2, 1}, 6)), UsageError);
  CHECK_THROWS_AS(series::lagrange_invert(rat(ctx, {0, 0, 1}, 6)), UsageError);
}

TEST_CASE("lagrange_invert matches the coefficient formula on random input") {
  std::mt19937_64 rng(11);
  PrimeContext ctx{7, 40};
  for (int trial = 0; trial < 25; ++trial) {
    S s = random_series(rng, ctx, 10, 2, false) + S::monomial(ctx, 1, 10);
    S b = series::lagrange_invert(s);
    CHECK(series::agreement_order(b, lagrange_oracle(s)) == 10);
    // Both compositions give the identity.
    S w = S::monomial(ctx, 1, 10);
    CHECK(series::agreement_order(series::compose(s, b), w) == 10);
    CHECK(series::agreement_order(series::compose(b, s), w) == 10);
    // Involution.
    CHECK(series::agreement_order(series::lagrange_invert(b), s) == 10);
  }
}

TEST_CASE("agreement_order examples") {
  PrimeContext ctx{5, 30};
  S a = rat(ctx, {0, 1}, 8);
  CHECK(series::agreement_order(a, a) == 8);
  CHECK(series::agreement_order(a, a.truncated(6)) == 6);
  CHECK(series::agreement_order(a, rat(ctx, {0, 1, 0, 0, 0, 1}, 8)) == 5);
}

TEST_CASE("gauss_norm examples") {
  PrimeContext ctx{5, 30};
  S w = S::monomial(ctx, 1, 6);
  CHECK(series::gauss_norm(w, DiskSpec{DiskSpec::Center::infinity, 0}) == Valuation::of(0));
  CHECK(series::gauss_norm(w, DiskSpec{DiskSpec::Center::infinity, 2}) == Valuation::of(2));
  S s = rat(ctx, {0, 1, 0, mpq_class(-1, 10)}, 6);  // v(c/2) = -1
  CHECK(series::gauss_norm(s, DiskSpec{DiskSpec::Center::infinity, 1}) == Valuation::of(1));
}

TEST_CASE("evaluate examples") {
  PrimeContext ctx{5, 30};
  DiskSpec unit{DiskSpec::Center::infinity, 0};
  S w = S::monomial(ctx, 1, 10);
  auto e = series::evaluate(w, ExactQp(ctx, mpq_class(1, 5)), unit);
  CHECK(e.value.valuation() == Valuation::of(1));
  CHECK(e.value.value() == 5);
  CHECK(e.error >= 10);
  CHECK_THROWS_AS(series::evaluate(w, ExactQp(ctx, 2), unit), DomainError);
  CHECK_THROWS_AS(series::evaluate(w, ExactQp::zero(ctx), DiskSpec{DiskSpec::Center::zero, 0}), DomainError);
  // Coefficient growth faster than the disk allows.
  S wild = rat(ctx, {0, 1, mpq_class(1, 25)}, 4);
  CHECK_THROWS_AS(series::evaluate(wild, ExactQp(ctx, mpq_class(1, 5)), unit), DomainError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(3);
  PrimeContext ctx{5, 40};
  for (int trial = 0; trial < 40; ++trial) {
    S a = random_series(rng, ctx, 8, trial % 3, false);
    S b = random_series(rng, ctx, 7, 1, false);
    S c = random_series(rng, ctx, 9, 0, false);
    S l = (a * b) * c, r = a * (b * c);
    CHECK(series::agreement_order(l, r) == std::min(l.trunc(), r.trunc()));
    S d1 = a * (b + c), d2 = a * b + a * c;
    CHECK(series::agreement_order(d1, d2) == std::min(d1.trunc(), d2.trunc()));
    CHECK(series::agreement_order(a + b, b + a) == (a + b).trunc());
  }
}

TEST_CASE("nth_root reproduces its input and preserves integrality") {
  std::mt19937_64 rng(5);
  for (long p : {3L, 7L}) {
    PrimeContext ctx{p, 40};
    for (long n : {2L, 3L, 4L, 5L}) {
      if (n % p == 0) continue;
      for (int trial = 0; trial < 6; ++trial) {
        bool integral = trial % 2 == 0;
        S a = random_unit(rng, ctx, 12, integral);
        S r = series::nth_root(a, n);
        CHECK(series::agreement_order(series::pow(r, static_cast<unsigned long>(n)), a) == 12);
        if (integral) {
          for (int k = 0; k < 12; ++k) CHECK(r.coeff(k).valuation().certainly_ge(0));
        }
      }
    }
  }
}

TEST_CASE("invert_unit is an involution") {
  std::mt19937_64 rng(8);
  PrimeContext ctx{5, 40};
  for (int trial = 0; trial < 20; ++trial) {
    S a = random_unit(rng, ctx, 10);
    CHECK(series::agreement_order(series::invert_unit(series::invert_unit(a)), a) == 10);
    CHECK(series::agreement_order(a * series::invert_unit(a), S::one(ctx, 10)) == 10);
  }
}

TEST_CASE("gauss_norm is multiplicative") {
  std::mt19937_64 rng(13);
  PrimeContext ctx{5, 40};
  for (mpq_class radius : {mpq_class(0), mpq_class(1), mpq_class(3, 2)}) {
    DiskSpec disk{DiskSpec::Center::infinity, radius};
    for (int trial = 0; trial < 30; ++trial) {
      // Polynomials (no truncation loss): pad the truncation past the product degree.
      std::vector<mpq_class> ca(5, 0), cb(5, 0);
      for (auto& x : ca) x = testing::random_rational(rng, 5, 2);
      for (auto& x : cb) x = testing::random_rational(rng, 5, 2);
      S a = rat(ctx, ca, 12), b = rat(ctx, cb, 12);
      S prod = a * b;
      CHECK(prod.trunc() >= 9);
      CHECK(series::gauss_norm(prod, disk).exact() ==
            series::gauss_norm(a, disk).exact() + series::gauss_norm(b, disk).exact());
    }
  }
}

TEST_CASE("evaluation is linear within error bounds") {
  std::mt19937_64 rng(17);
  for (int backend = 0; backend < 2; ++backend) {
    PrimeContext ctx{5, 30};
    DiskSpec unit{DiskSpec::Center::infinity, 0};
    for (int trial = 0; trial < 20; ++trial) {
      S a = random_series(rng, ctx, 10, 1, true), b = random_series(rng, ctx, 10, 1, true);
      mpq_class z = mpq_class(testing::random_integral(rng, 5) + 1) / 5;
      if (z == 0 || localfield::padic_order(z, 5) >= 0) z = mpq_class(2, 5);
      if (backend == 0) {
        ExactQp x(ctx, z);
        auto ea = series::evaluate(a, x, unit), eb = series::evaluate(b, x, unit), es = series::evaluate(a + b, x, unit);
        mpq_class bound = std::min({ea.error, eb.error, es.error});
        CHECK((es.value - ea.value - eb.value).valuation().certainly_ge(bound));
      } else {
        auto to_capped = [&](const S& src) {
          std::vector<mpq_class> c;
          for (const auto& x : src.dense()) c.push_back(x.value());
          return TailSeries<Padic>::from_rationals(ctx, c, src.trunc());
        };
        auto ta = to_capped(a), tb = to_capped(b);
        Padic x = Padic::from_rational(ctx, z);
        auto ea = series::evaluate(ta, x, unit), eb = series::evaluate(tb, x, unit),
             es = series::evaluate(ta + tb, x, unit);
        mpq_class bound = std::min({ea.error, eb.error, es.error});
        CHECK((es.value - ea.value - eb.value).valuation().certainly_ge(bound));
        // Capped and exact values agree to the reported bound.
        auto exact = series::evaluate(a, ExactQp(ctx, z), unit);
        CHECK((exact.value - ExactQp(ctx, ea.value.lift())).valuation().certainly_ge(std::min(ea.error, exact.error)));
      }
    }
  }
}
