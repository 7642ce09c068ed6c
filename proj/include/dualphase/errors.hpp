#pragma once

#include <stdexcept>
#include <string>

namespace dualphase {

// Domain errors map to CLI exit code 3, config errors to exit code 2.

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point within rho_min of a source line.
struct OnAxisError : DomainError {
    using DomainError::DomainError;
};

// |v| >= 0.1 c; first-order boost formulas no longer trustworthy.
struct TooFastError : DomainError {
    using DomainError::DomainError;
};

struct NonMonotonicTimeError : DomainError {
    using DomainError::DomainError;
};

struct NotClosedError : DomainError {
    using DomainError::DomainError;
};

struct PathError : DomainError {
    using DomainError::DomainError;
};

// Operation asked of a source kind that does not support it.
struct WrongKindError : DomainError {
    using DomainError::DomainError;
};

// Accumulated azimuth of a closed path is not an integer multiple of 2 pi.
struct NonIntegerWindingError : DomainError {
    using DomainError::DomainError;
};

// Fixed-step integrator could not reach tolerance before the step floor.
struct StepSizeUnderflowError : DomainError {
    using DomainError::DomainError;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dualphase
