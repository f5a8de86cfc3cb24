#pragma once

#include <stdexcept>
#include <string>

namespace motsim {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Negative argument where a nonnegative one is required (e.g. gamma(v) with v < 0).
class NegativeInput : public Error {
public:
    using Error::Error;
};

/// A tabulated motility evaluated to a value <= 0.
class NonPositiveMotility : public Error {
public:
    using Error::Error;
};

/// Empty or inverted sampling range, or too few samples.
class InvalidRange : public Error {
public:
    using Error::Error;
};

/// Structurally invalid argument (bad parameter value, malformed table, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Field length does not match the grid it is used with.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// A state component dropped below the tolerated negativity band.
class NegativityBreach : public Error {
public:
    using Error::Error;
};

/// NaN or infinity appeared in a state or operator result.
class NonFinite : public Error {
public:
    using Error::Error;
};

/// Tridiagonal elimination hit a vanishing pivot.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Operation defined only for the exponential motility family.
class WrongFamily : public Error {
public:
    using Error::Error;
};

/// Initial data with a negative component.
class NegativeInitialData : public Error {
public:
    using Error::Error;
};

} // namespace motsim
