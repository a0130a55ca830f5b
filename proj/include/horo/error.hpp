#pragma once

#include <stdexcept>
#include <string>

namespace horo {

// Input violates an operation's precondition (off a hyperquadric, outside a
// chart or cone, empty sample set, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The computation ran but its result is unusable: degenerate first fundamental
// form, no sign change for a root, divergence, failed verification.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace horo
