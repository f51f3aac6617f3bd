#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace d2p {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied parameter (even p, negative count, ...).
struct InvalidParameterError : Error {
    using Error::Error;
};

// Arithmetic between elements of different fields.
struct IncompatibleFieldError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Dimension / variable-layout mismatch.
struct ShapeError : Error {
    using Error::Error;
};

// A MatrixRep violating the group relations.
struct InvalidRepresentationError : Error {
    using Error::Error;
};

// Operation precondition violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// A search that is guaranteed to succeed found nothing; bug signal.
struct InfeasibleError : Error {
    using Error::Error;
};

// Requested computation outside the supported range (e.g. composite p
// for the explicit separating-set construction).
struct UnsupportedError : Error {
    using Error::Error;
};

// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

// Exhaustive verification would need more points than the budget allows.
struct BudgetExceededError : Error {
    std::uint64_t required;
    BudgetExceededError(const std::string& msg, std::uint64_t required_points)
        : Error(msg), required(required_points) {}
};

}  // namespace d2p
