#include "nadyn/localfield/context.hpp"

#include <gmpxx.h>

#include <string>

#include "nadyn/errors.hpp"

namespace nadyn::localfield {

bool is_prime(long n) {
  if (n < 2) return false;
  mpz_class z(n);
  int verdict = mpz_probab_prime_p(z.get_mpz_t(), 25);
  if (verdict != 1) return verdict == 2;
  // "probably prime": settle it by trial division, cheap below 2^31.
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeContext make_prime_context(long p, int precision) {
  if (p > (1L << 31)) throw UsageError("prime " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (precision < 1) throw UsageError("precision must be >= 1");
  return PrimeContext{p, precision};
}

}  // namespace nadyn::localfield
