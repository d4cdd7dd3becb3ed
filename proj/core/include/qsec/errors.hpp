#pragma once

#include <stdexcept>
#include <string>

namespace qsec {

// Input-validation failures. The CLI maps these to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix is not hermitian within tolerance.
struct NotHermitianError : InputError {
  using InputError::InputError;
};

// Trace is not zero within tolerance where a traceless matrix is required.
struct NonTracelessError : InputError {
  using InputError::InputError;
};

// The two given matrices do not span a 2-plane (Gram matrix ill-conditioned).
struct DegenerateSpanError : InputError {
  using InputError::InputError;
};

// A polar dual was requested for a region that does not strictly contain the origin.
struct OriginOutsideError : InputError {
  using InputError::InputError;
};

// An operation was invoked outside the parameter regime where it is defined.
struct InapplicableRegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Internal numerical failure (root finding or eigensolver did not converge).
// The CLI maps these to exit code 1.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qsec
