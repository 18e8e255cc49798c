#pragma once

#include <stdexcept>
#include <string>

namespace convlab {

/// Malformed input: unknown atom, duplicate kernel, axiom violation in a
/// document, non-surjective map where a surjection is required.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different carriers.
class CarrierMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A configured size bound (carrier, product, function space) was exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold failed. Always a defect.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace convlab
