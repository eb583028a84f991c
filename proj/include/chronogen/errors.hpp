// errors.hpp — exception types shared by all chronogen modules

#pragma once

#include <stdexcept>
#include <string>

namespace chronogen {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (shape, Hermiticity, zero vector, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Two trajectories or sample sets that must share a grid do not.
class GridMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Requested dimension exceeds the dense-storage limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Clock state has (numerically) no overlap with the global state at lambda.
class SingularOverlapError : public Error {
public:
    SingularOverlapError(double lambda, double overlap)
        : Error("singular clock overlap at lambda = " + std::to_string(lambda) +
                " (N = " + std::to_string(overlap) + ")"),
          lambda_(lambda), overlap_(overlap) {}

    double lambda() const noexcept { return lambda_; }
    double overlap() const noexcept { return overlap_; }

private:
    double lambda_;
    double overlap_;
};

// A readout curve that is not strictly monotone cannot be inverted.
class ReadoutUnusableError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

// A verification stamp (residual / infidelity bound) was not met.
class VerificationError : public Error {
public:
    using Error::Error;
};

// Malformed configuration document (not valid JSON, wrong value types).
class ConfigParseError : public Error {
public:
    using Error::Error;
};

// Well-formed configuration with semantically invalid content.
class ConfigValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace chronogen
