#include "nadyn/localfield/fp_poly.hpp"

#include <cstdint>
#include <utility>

#include "nadyn/errors.hpp"

namespace nadyn::localfield {

namespace {

using Fp = std::vector<std::int64_t>;

struct Ring {
  std::int64_t p;

  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
  }
  std::int64_t norm(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t e = p - 2, r = 1;
    a = norm(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  static void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  Fp rem(Fp a, const Fp& m) const {
    trim(a);
    std::int64_t lead_inv = inv(m.back());
    while (a.size() >= m.size()) {
      std::int64_t q = mul(a.back(), lead_inv);
      std::size_t off = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) a[off + i] = norm(a[off + i] - mul(q, m[i]));
      trim(a);
    }
    return a;
  }

  Fp mulmod(const Fp& a, const Fp& b, const Fp& m) const {
    if (a.empty() || b.empty()) return {};
    Fp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = norm(c[i + j] + mul(a[i], b[j]));
    }
    return rem(std::move(c), m);
  }

  Fp powmod(Fp base, std::int64_t e, const Fp& m) const {
    Fp acc{1};
    base = rem(std::move(base), m);
    while (e > 0) {
      if (e & 1) acc = mulmod(acc, base, m);
      e >>= 1;
      if (e > 0) base = mulmod(base, base, m);
    }
    return acc;
  }

  Fp gcd(Fp a, Fp b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Fp r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }
};

}  // namespace

bool irreducible_mod_p(const std::vector<long>& coeffs, long p) {
  Ring ring{p};
  Fp h;
  for (long c : coeffs) h.push_back(ring.norm(c));
  Ring::trim(h);
  const int n = static_cast<int>(h.size()) - 1;
  if (n < 1) throw UsageError("irreducibility test needs degree >= 1");
  if (n == 1) return true;

  // frob[k] = x^(p^k) mod h.
  std::vector<Fp> frob{Fp{0, 1}};
  for (int k = 1; k <= n; ++k) frob.push_back(ring.powmod(frob.back(), p, h));

  auto minus_x = [&](Fp a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = ring.norm(a[1] - 1);
    Ring::trim(a);
    return a;
  };
  if (!minus_x(frob[n]).empty()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool prime = true;
    for (int r = 2; r * r <= q; ++r) prime = prime && (q % r != 0);
    if (!prime) continue;
    Fp g = ring.gcd(h, minus_x(frob[n / q]));
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace nadyn::localfield
