#include <random>

#include "doctest.h"
#include "nadyn/errors.hpp"
#include "nadyn/localfield/conjugates.hpp"
#include "nadyn/localfield/exact.hpp"
#include "nadyn/localfield/extension.hpp"
#include "nadyn/localfield/fp_poly.hpp"
#include "nadyn/localfield/hensel.hpp"
#include "nadyn/localfield/padic.hpp"
#include "support/generators.hpp"

using namespace nadyn;
using namespace nadyn::localfield;

namespace {

template <class F>
F q(const typename F::Context& ctx, const char* text) {
  return F::from_rational(ctx, parse_rational(text));
}

using ExactExt = ExtElement<ExactQp>;

ExtContext<ExactQp> ramified_quadratic(long p) {
  PrimeContext ctx{p, 20};
  return ExtContext<ExactQp>{ExtensionField<ExactQp>::create(ctx, std::vector<mpq_class>{-p, 0, 1},
                                                             StageKind::eisenstein)};
}

}  // namespace

TEST_CASE("valuation arithmetic and parsing") {
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("abc"), UsageError);
  CHECK(rational_string(mpq_class(-1, 2)) == "-1/2");

  auto a = Valuation::of(mpq_class(1, 2));
  auto b = Valuation::at_least(3);
  CHECK((a + b).is_lower_bound());
  CHECK((a + Valuation::infinite()).is_infinite());
  CHECK(b.to_string() == ">=3");
  CHECK_THROWS_AS(b.exact(), PrecisionError);
  CHECK(padic_order(mpq_class(5, 9), 3) == -2);
}

TEST_CASE("field_arith examples") {
  SUBCASE("capped: (2 + O(5^4)) + (3 + O(5^4))") {
    PrimeContext ctx{5, 4};
    Padic s = Padic::from_rational(ctx, 2) + Padic::from_rational(ctx, 3);
    CHECK(s.valuation() == Valuation::of(1));
    CHECK(*s.absolute_precision() == 4);
    CHECK(s.lift() == 5);
  }
  SUBCASE("pi * pi in Q_3[pi], pi^2 = 3") {
    auto ctx = ramified_quadratic(3);
    auto pi = ExactExt::generator(ctx);
    auto sq = pi * pi;
    CHECK(agrees(sq, ExactExt::from_rational(ctx, 3)));
    CHECK(sq.valuation() == Valuation::of(1));

    PrimeContext capped{3, 10};
    auto field = ExtensionField<Padic>::create(capped, std::vector<mpq_class>{-3, 0, 1}, StageKind::eisenstein);
    ExtContext<Padic> cctx{field};
    auto cp = ExtElement<Padic>::generator(cctx);
    CHECK((cp * cp).coefficients()[0].lift() == 3);
    CHECK((cp * cp).valuation() == Valuation::of(1));
  }
  SUBCASE("exact (1/3) * 3") {
    PrimeContext ctx{3, 20};
    ExactQp r = q<ExactQp>(ctx, "1/3") * q<ExactQp>(ctx, "3");
    CHECK(r.value() == 1);
    CHECK(r.valuation() == Valuation::of(0));
  }
}

TEST_CASE("field_arith errors") {
  PrimeContext ctx{5, 4};
  Padic tiny = Padic::from_rational(ctx, 625);  // 5^4, fine
  Padic zero_ish = Padic::from_rational(ctx, 1) - Padic::from_rational(ctx, 1 + 625);
  CHECK(zero_ish.is_zero());
  CHECK(zero_ish.valuation().is_lower_bound());
  CHECK_THROWS_AS(tiny / zero_ish, PrecisionError);
  CHECK_THROWS_AS(ExactQp::one(ctx) / ExactQp::zero(ctx), PrecisionError);
  CHECK_THROWS_AS(Padic::one(ctx) + Padic::one(PrimeContext{7, 4}), UsageError);
  auto e3 = ramified_quadratic(3);
  auto e5 = ramified_quadratic(5);
  CHECK_THROWS_AS(ExactExt::one(e3) * ExactExt::one(e5), UsageError);
}

TEST_CASE("subtraction cancellation lowers known precision") {
  PrimeContext ctx{5, 6};
  Padic a = Padic::from_rational(ctx, 1 + 5 * 5 * 7);
  Padic b = Padic::from_rational(ctx, 1);
  Padic d = a - b;
  CHECK(d.valuation() == Valuation::of(2));
  CHECK(d.relative_precision() == 4);
  CHECK(*d.absolute_precision() == 6);
}

TEST_CASE("valuation_of examples") {
  PrimeContext ctx{3, 20};
  CHECK(ExactQp(ctx, 3).valuation() == Valuation::of(1));
  CHECK(ExactQp(ctx, mpq_class(5, 9)).valuation() == Valuation::of(-2));
  auto e = ramified_quadratic(3);
  CHECK(ExactExt::generator(e).valuation() == Valuation::of(mpq_class(1, 2)));
  CHECK(ExactExt::zero(e).valuation().is_infinite());
  PrimeContext capped{3, 5};
  CHECK(Padic::zero_to(capped, 5).valuation() == Valuation::at_least(5));
}

TEST_CASE("hensel_lift examples") {
  SUBCASE("sqrt(6) in Z_5") {
    for (int backend = 0; backend < 2; ++backend) {
      PrimeContext ctx{5, 20};
      if (backend == 0) {
        Poly<ExactQp> g = Poly<ExactQp>::from_rationals(ctx, {-6, 0, 1});
        ExactQp x = hensel_lift(g, ExactQp::one(ctx), 20);
        CHECK(g(x).valuation().certainly_ge(20));
        CHECK(((x - ExactQp::one(ctx)).valuation().certainly_ge(1)));
      } else {
        Poly<Padic> g = Poly<Padic>::from_rationals(ctx, {-6, 0, 1});
        Padic x = hensel_lift(g, Padic::one(ctx), 20);
        mpz_class m = prime_power(5, 20);
        mpz_class u = x.unit();
        CHECK(mpz_class((u * u - 6) % m) == 0);
        CHECK(x.residue() == 1);
      }
    }
  }
  SUBCASE("exact root returned unchanged") {
    PrimeContext ctx{5, 20};
    auto g = Poly<ExactQp>::from_rationals(ctx, {-1, 0, 1});
    CHECK(hensel_lift(g, ExactQp::one(ctx), 20).value() == 1);
  }
  SUBCASE("x^2 - 5 has no simple unit root") {
    PrimeContext ctx{5, 20};
    auto g = Poly<ExactQp>::from_rationals(ctx, {-5, 0, 1});
    for (long x0 : {0L, 1L, 2L, 7L}) {
      CHECK_THROWS_AS(hensel_lift(g, ExactQp(ctx, x0), 20), DomainError);
    }
  }
  SUBCASE("target beyond the capped precision") {
    PrimeContext ctx{5, 8};
    auto g = Poly<Padic>::from_rationals(ctx, {-6, 0, 1});
    CHECK_THROWS_AS(hensel_lift(g, Padic::one(ctx), 30), PrecisionError);
  }
}

TEST_CASE("extension construction rules") {
  PrimeContext ctx{5, 20};
  using Field = ExtensionField<ExactQp>;
  CHECK_THROWS_AS(Field::create(ctx, std::vector<mpq_class>{-25, 0, 1}, StageKind::eisenstein), UsageError);
  CHECK_THROWS_AS(Field::create(ctx, std::vector<mpq_class>{-6, 0, 1}, StageKind::unramified), UsageError);
  CHECK_THROWS_AS(Field::create(ctx, std::vector<mpq_class>{-5, 0, 2}, StageKind::eisenstein), UsageError);
  auto unr = Field::create(ctx, std::vector<mpq_class>{-2, 0, 1}, StageKind::unramified);
  CHECK(unr->ramification() == 1);
  CHECK(unr->residue_degree() == 2);
  CHECK_THROWS_AS(Field::create(ctx, std::vector<mpq_class>{-5, 0, 0, 0, 0, 0, 0, 0, 0, 1}, StageKind::eisenstein),
                  UsageError);

  // Tower: Q_3(a), a^2 = 3, then y^2 - a over it.
  auto e1 = ramified_quadratic(3);
  using Tower = ExtElement<ExactExt>;
  auto g = std::vector<ExactExt>{-ExactExt::generator(e1), ExactExt::zero(e1), ExactExt::one(e1)};
  auto top = ExtensionField<ExactExt>::create(e1, g, StageKind::eisenstein);
  ExtContext<ExactExt> tctx{top};
  CHECK(top->ramification() == 4);
  CHECK(Tower::generator(tctx).valuation() == Valuation::of(mpq_class(1, 4)));
  auto y = Tower::generator(tctx);
  CHECK(agrees(y * y * y * y, Tower::from_rational(tctx, 3)));
}

TEST_CASE("irreducibility over F_p") {
  CHECK(irreducible_mod_p({2, 0, 1}, 5));    // x^2 + 2
  CHECK(!irreducible_mod_p({-1, 0, 1}, 5));  // (x-1)(x+1)
  CHECK(irreducible_mod_p({1, 1, 0, 1}, 2)); // x^3 + x + 1
  CHECK(!irreducible_mod_p({1, 0, 1, 0, 1}, 2));  // (x^2+x+1)^2
  CHECK(irreducible_mod_p({2, 1, 0, 0, 1}, 3) == true);  // x^4 + x + 2 over F_3
}

TEST_CASE("conjugates examples") {
  auto e = ramified_quadratic(3);
  auto pi = ExactExt::generator(e);
  auto c = conjugates(pi);
  REQUIRE(c.size() == 2);
  CHECK(agrees(c[0], pi));
  CHECK(agrees(c[1], -pi));

  auto a = ExactExt::from_rational(e, mpq_class(7, 2));
  for (const auto& x : conjugates(a)) CHECK(agrees(x, a));

  SUBCASE("x^2 - 6 over Q_5 splits in the base, so it is no field stage") {
    PrimeContext ctx{5, 20};
    CHECK_THROWS_AS(ExtensionField<ExactQp>::create(ctx, std::vector<mpq_class>{-6, 0, 1}, StageKind::unramified),
                    UsageError);
    auto g = Poly<ExactQp>::from_rationals(ctx, {-6, 0, 1});
    auto r1 = hensel_lift(g, ExactQp(ctx, 1), 20);
    auto r2 = hensel_lift(g, ExactQp(ctx, -1), 20);
    CHECK((r1 + r2).valuation().certainly_ge(19));
    CHECK(!(r1 - r2).valuation().certainly_ge(1));
  }
  SUBCASE("unramified quadratic") {
    PrimeContext ctx{5, 20};
    ExtContext<ExactQp> u{ExtensionField<ExactQp>::create(ctx, std::vector<mpq_class>{-2, 0, 1}, StageKind::unramified)};
    auto x = ExactExt::generator(u) + ExactExt::from_rational(u, 3);
    auto cs = conjugates(x);
    CHECK(agrees(cs[1], ExactExt::from_rational(u, 3) - ExactExt::generator(u)));
  }
  SUBCASE("cubic Eisenstein x^3 - 7 over Q_7 (mu_3 in Q_7)") {
    PrimeContext ctx{7, 12};
    ExtContext<Padic> c3{ExtensionField<Padic>::create(ctx, std::vector<mpq_class>{-7, 0, 0, 1}, StageKind::eisenstein)};
    auto roots = generator_images(c3);
    REQUIRE(roots.size() == 3);
    auto g = Poly<Padic>::from_rationals(ctx, {-7, 0, 0, 1});
    for (const auto& r : roots) CHECK(g(r).valuation().certainly_ge(12));
    // Conjugating twice returns the same multiset.
    auto pi = ExtElement<Padic>::generator(c3);
    auto z = pi * pi + ExtElement<Padic>::from_rational(c3, 2);
    auto once = conjugates(z);
    for (const auto& img : once) {
      auto twice = conjugates(img);
      for (const auto& t : twice) {
        bool found = false;
        for (const auto& o : once) found = found || (t - o).valuation().certainly_ge(10);
        CHECK(found);
      }
    }
  }
  SUBCASE("x^3 - 5 over Q_5 is not normal (no cube roots of unity)") {
    PrimeContext ctx{5, 8};
    ExtContext<Padic> c3{ExtensionField<Padic>::create(ctx, std::vector<mpq_class>{-5, 0, 0, 1}, StageKind::eisenstein)};
    CHECK_THROWS_AS(generator_images(c3), DomainError);
  }
}

TEST_CASE("ultrametric and multiplicativity on random pairs") {
  std::mt19937_64 rng(20261016);
  for (long p : {3L, 5L, 7L}) {
    PrimeContext ctx{p, 24};
    auto e = ramified_quadratic(p);
    for (int trial = 0; trial < 200; ++trial) {
      ExactQp a(ctx, testing::random_rational(rng, p)), b(ctx, testing::random_rational(rng, p));
      auto va = a.valuation().exact(), vb = b.valuation().exact();
      CHECK((a * b).valuation().exact() == va + vb);
      auto vs = (a + b).valuation();
      if (va != vb) {
        CHECK(vs.exact() == std::min(va, vb));
      } else {
        CHECK(vs.certainly_ge(va));
      }
      ExactExt x = ExactExt::from_rational(e, testing::random_rational(rng, p)) +
                   ExactExt::from_rational(e, testing::random_rational(rng, p)) * ExactExt::generator(e);
      ExactExt y = ExactExt::from_rational(e, testing::random_rational(rng, p)) +
                   ExactExt::from_rational(e, testing::random_rational(rng, p)) * ExactExt::generator(e);
      CHECK((x * y).valuation().exact() == x.valuation().exact() + y.valuation().exact());
      auto vx = x.valuation().exact(), vy = y.valuation().exact();
      if (vx != vy) CHECK((x + y).valuation().exact() == std::min(vx, vy));
      // Norm-based valuation agrees with the e-indexed minimum.
      CHECK(x.norm().valuation().exact() / 2 == vx);
      CHECK(agrees(x * x.inverse(), ExactExt::one(e)));
    }
  }
}

TEST_CASE("exact and capped backends agree modulo p^A") {
  std::mt19937_64 rng(7);
  for (long p : {3L, 5L, 7L}) {
    PrimeContext ctx{p, 16};
    for (int trial = 0; trial < 300; ++trial) {
      mpq_class x = testing::random_rational(rng, p), y = testing::random_rational(rng, p);
      ExactQp ex(ctx, x), ey(ctx, y);
      Padic px = Padic::from_rational(ctx, x), py = Padic::from_rational(ctx, y);
      auto check = [&](const ExactQp& exact, const Padic& capped) {
        auto abs = capped.absolute_precision();
        REQUIRE(abs.has_value());
        ExactQp diff = exact - ExactQp(ctx, capped.lift());
        CHECK(diff.valuation().certainly_ge(*abs));
      };
      check(ex + ey, px + py);
      check(ex - ey, px - py);
      check(ex * ey, px * py);
      check(ex / ey, px / py);
    }
  }
}
