#pragma once

#include <stdexcept>

namespace qdeform {

// Invalid parameter combinations and out-of-domain evaluations.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised when a representation needs sqrt of a negative a†a eigenvalue
// and non-unitary mode is off.
struct NonUnitaryError : DomainError {
  using DomainError::DomainError;
};

}  // namespace qdeform
