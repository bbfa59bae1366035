#pragma once

#include <compare>

namespace nadyn::localfield {

/// Base field Q_p with a working precision.
///
/// For the capped backend `precision` is the relative-precision cap A. For the
/// exact backend it is only the target used by approximate procedures (Hensel
/// lifting, root search) and by "indistinguishable from zero" decisions in
/// approximate comparisons.
struct PrimeContext {
  long p = 2;
  int precision = 20;

  long prime() const { return p; }
  int working_precision() const { return precision; }
  int ramification() const { return 1; }
  int residue_degree() const { return 1; }

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;
};

PrimeContext make_prime_context(long p, int precision);

bool is_prime(long n);

}  // namespace nadyn::localfield
