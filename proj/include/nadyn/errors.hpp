#pragma once

#include <stdexcept>
#include <string>

namespace nadyn {

// Malformed input: wrong field, bad normalization, unparsable values.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold (p | d, point outside a disk, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact valuation or a nonzero divisor was required, but the value is only
// known to vanish modulo the working precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nadyn

namespace nadyn {

// An identity that must hold for correct code did not: a bug, not bad input.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nadyn
