#include "nadyn/arboreal/kummer.hpp"

#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>

#include "nadyn/errors.hpp"

namespace nadyn::arboreal {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long mulmod(long a, long b, long m) {
  return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

KummerLevel::KummerLevel(int d, int level) : d_(d), level_(level), modulus_(1) {
  if (d < 2) throw UsageError("tree degree must be >= 2");
  if (level < 1) throw UsageError("tree level must be >= 1");
  for (int k = 0; k < level; ++k) {
    if (modulus_ > (1L << 40) / d) throw BudgetExceeded("budget exceeded: d^N too large");
    modulus_ *= d;
  }
}

bool KummerLevel::is_element(const KummerElement& g) const {
  return g.i >= 0 && g.i < modulus_ && g.j > 0 && g.j < modulus_ && std::gcd(g.j, modulus_) == 1;
}

KummerElement KummerLevel::compose(const KummerElement& second, const KummerElement& first) const {
  return {mod(second.i + mulmod(second.j, first.i, modulus_), modulus_), mulmod(second.j, first.j, modulus_)};
}

KummerElement KummerLevel::inverse(const KummerElement& g) const {
  // j^-1 by extended Euclid; (i, j)^-1 = (-j^-1 i, j^-1).
  long a = mod(g.j, modulus_), m = modulus_, x0 = 1, x1 = 0;
  while (m != 0) {
    long q = a / m;
    long t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw UsageError("j is not invertible modulo d^N");
  long jinv = mod(x0, modulus_);
  return {mod(-mulmod(jinv, g.i, modulus_), modulus_), jinv};
}

long KummerLevel::act(const KummerElement& g, long label) const {
  if (std::gcd(mod(g.j, modulus_), modulus_) != 1) {
    throw UsageError("j = " + std::to_string(g.j) + " is not invertible modulo " + std::to_string(modulus_));
  }
  return mod(mulmod(mod(g.j, modulus_), mod(label, modulus_), modulus_) + g.i, modulus_);
}

long KummerLevel::order() const { return modulus_ * euler_phi(modulus_); }

std::vector<KummerElement> KummerLevel::elements() const {
  std::vector<KummerElement> out;
  for (long j = 1; j < modulus_; ++j) {
    if (std::gcd(j, modulus_) != 1) continue;
    for (long i = 0; i < modulus_; ++i) out.push_back({i, j});
  }
  return out;
}

KummerLevel KummerLevel::parent() const {
  if (level_ < 2) throw UsageError("restriction needs level >= 2");
  return KummerLevel(d_, level_ - 1);
}

KummerElement KummerLevel::restrict(const KummerElement& g) const {
  const long m = parent().modulus();
  return {mod(g.i, m), mod(g.j, m)};
}

long KummerLevel::restrict_label(long label) const { return mod(label, parent().modulus()); }

long subgroup_orbit_count(const std::vector<KummerElement>& generators, const KummerLevel& level) {
  const long n = level.modulus();
  std::vector<long> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0L);
  auto find = [&](long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  long orbits = n;
  for (const auto& g : generators) {
    for (long k = 0; k < n; ++k) {
      long a = find(k), b = find(level.act(g, k));
      if (a != b) {
        parent[a] = b;
        --orbits;
      }
    }
  }
  return orbits;
}

long subgroup_order(const std::vector<KummerElement>& generators, const KummerLevel& level,
                    const Budget& budget) {
  const long m = level.modulus();
  auto key = [m](const KummerElement& g) { return g.j * m + g.i; };
  std::unordered_set<long> seen{key(level.identity())};
  std::queue<KummerElement> todo;
  todo.push(level.identity());
  while (!todo.empty()) {
    KummerElement g = todo.front();
    todo.pop();
    for (const auto& s : generators) {
      KummerElement h = level.compose(s, g);
      if (seen.insert(key(h)).second) {
        if (static_cast<long>(seen.size()) > budget.max_group_elements) {
          throw BudgetExceeded("budget exceeded: subgroup closure");
        }
        todo.push(h);
      }
    }
  }
  return static_cast<long>(seen.size());
}

long predicted_degree_step(long v_q, int d, int n) {
  if (v_q == 0) throw DomainError("not applicable: Omega(P) is a unit");
  if (d < 2 || n < 0) throw UsageError("need d >= 2 and n >= 0");
  // e_m = d^m / gcd(d^m, v_q); only the part of v_q built from d's primes
  // matters, so track gcds without forming d^m once it exceeds |v_q|.
  auto ramification = [&](int m) {
    long power = 1;
    long g = 1;
    long e = 1;
    for (int k = 0; k < m; ++k) {
      power *= d;
      g = std::gcd(power, std::labs(v_q));
      e = power / g;
      if (power > (1L << 40)) throw BudgetExceeded("budget exceeded: d^n");
    }
    return e;
  };
  return ramification(n + 1) / ramification(n);
}

}  // namespace nadyn::arboreal
