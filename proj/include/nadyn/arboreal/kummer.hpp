#pragma once

#include <cstdint>
#include <vector>

#include "nadyn/boettcher/budget.hpp"

namespace nadyn::arboreal {

/// (i, j) acting on labels by k -> j k + i.
struct KummerElement {
  long i = 0;
  long j = 1;

  friend bool operator==(const KummerElement&, const KummerElement&) = default;
};

/// The group (Z/d^N) x| (Z/d^N)^x acting on level N of the d-ary tree,
/// labelled consistently by Z/d^N.
class KummerLevel {
 public:
  KummerLevel(int d, int level);

  int d() const { return d_; }
  int level() const { return level_; }
  long modulus() const { return modulus_; }

  bool is_element(const KummerElement& g) const;
  KummerElement identity() const { return {0, 1}; }
  // (i2, j2) o (i1, j1) = (i2 + j2 i1, j2 j1): apply `first`, then `second`.
  KummerElement compose(const KummerElement& second, const KummerElement& first) const;
  KummerElement inverse(const KummerElement& g) const;
  long act(const KummerElement& g, long label) const;

  // d^N * phi(d^N)
  long order() const;
  std::vector<KummerElement> elements() const;

  // Reduction of elements and labels to level N - 1.
  KummerLevel parent() const;
  KummerElement restrict(const KummerElement& g) const;
  long restrict_label(long label) const;

 private:
  int d_;
  int level_;
  long modulus_;
};

long euler_phi(long n);

/// Orbits of the subgroup generated by `generators` on Z/d^N.
long subgroup_orbit_count(const std::vector<KummerElement>& generators, const KummerLevel& level);

/// Order of the generated subgroup, by closure.
long subgroup_order(const std::vector<KummerElement>& generators, const KummerLevel& level,
                    const Budget& budget = Budget{});

/// e_{n+1} / e_n with e_m = d^m / gcd(d^m, v_q): the ramification step forced
/// in the tower of d^m-th roots of an element of valuation v_q.
long predicted_degree_step(long v_q, int d, int n);

}  // namespace nadyn::arboreal
