#pragma once

#include <stdexcept>
#include <string>

namespace curvosc {

// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameter value or coordinate outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation inside the guard band of a metric pole (C_kappa == 0).
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// kappa<0 state with 2*kappa*H_xi <= 0: the ladder energy scale is not
// defined and the orbit is unbound in x.
struct ScatteringRegimeError : DomainError {
    using DomainError::DomainError;
};

// Quantum number beyond the finite bound-state range (hyperboloid).
struct MuOutOfRangeError : DomainError {
    using DomainError::DomainError;
};

// Operation that only makes sense for kappa < 0.
struct NotHyperbolicError : DomainError {
    using DomainError::DomainError;
};

// Operation undefined at exactly kappa == 0.
struct FlatCurvatureError : DomainError {
    using DomainError::DomainError;
};

// Malformed or inconsistent run configuration (CLI / JSON layer).
struct ConfigError : Error {
    using Error::Error;
};

// A trajectory moved inside the safety floor of a coordinate wall.
struct WallProximityError : Error {
    using Error::Error;
};

// The implicit step equation could not be solved.
struct NewtonDivergenceError : Error {
    using Error::Error;
};

// A numerical routine failed to converge (eigensolver etc).
struct NumericalError : Error {
    using Error::Error;
};

} // namespace curvosc
