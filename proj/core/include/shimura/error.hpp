#pragma once

#include <stdexcept>
#include <string>

namespace shimura {

/// Raised when caller-supplied data violates an operation's precondition
/// (non-squarefree d, a level prime that is ramified in the algebra, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a criterion cannot be decided with the machinery available,
/// e.g. cyclotomic splitting over a quartic base at a prime dividing n.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shimura
