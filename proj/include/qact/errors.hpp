#pragma once

#include <stdexcept>
#include <string>

namespace qact {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller passed arguments that violate an operation's contract
// (bad qubit index, duplicate targets, wrong vector length, ...).
struct UsageError : Error {
    using Error::Error;
};

// Resource limits: register too wide, combinatorial enumeration too large.
struct CapacityError : Error {
    using Error::Error;
};

// Numeric input fails a precondition (non-normalized amplitudes, zero matrix).
struct ValidationError : Error {
    using Error::Error;
};

// Readout calibration produced a singular confusion matrix.
struct CalibrationError : Error {
    using Error::Error;
};

// Data-file problems: missing cells, duplicates, non-positive rates, bad I/O.
struct IngestionError : Error {
    using Error::Error;
};

// Quadrature / iterative solver failed to converge.
struct NumericalError : Error {
    using Error::Error;
};

// Experiment configuration rejected by schema validation.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qact
