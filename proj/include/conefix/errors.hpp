#pragma once

#include <stdexcept>
#include <string>

namespace conefix {

/// Malformed or inconsistent input: dimension mismatch, non-finite data,
/// parameters outside their admissible range.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for the data.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Floating-point breakdown: overflow, division by a vanishing quantity.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two approximations coincide, so a product of differences vanishes.
class DivisionHazard : public NumericError {
public:
    using NumericError::NumericError;
};

/// A quantity estimated from data is undefined for that data.
class EstimateUndefined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace conefix
