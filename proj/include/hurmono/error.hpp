#ifndef HURMONO_ERROR_HPP
#define HURMONO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hurmono {

// Malformed input or a precondition the caller can fix.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance is outside the supported enumeration limits.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the given number of marked fibers.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Always a defect, never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hurmono

#endif  // HURMONO_ERROR_HPP
