#pragma once

#include <stdexcept>
#include <string>

namespace swipt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Gamma/beta evaluated at a non-positive-integer pole.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Energy threshold at or beyond the rectenna saturation level.
struct SaturationError : DomainError {
    using DomainError::DomainError;
};

// Quadrature ran out of panels before the tail criterion was met.
struct ConvergenceError : Error {
    using Error::Error;
};

// A probability came back far outside [0,1]; the quadrature result is suspect.
struct DiagnosticError : Error {
    using Error::Error;
};

// Parameter or config value violates a documented invariant.
struct RangeError : Error {
    using Error::Error;
};

// Malformed config file.
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace swipt
