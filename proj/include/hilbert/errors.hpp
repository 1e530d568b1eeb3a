#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

/// Raised when an argument lies outside the region where an operation is defined.
/// The message names the violated constraint.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by series routines when the requested series does not converge.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace hilbert
