#pragma once

#include <stdexcept>
#include <string>

namespace young {

// Malformed textual input: shapes, scalars, matrices.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A well-formed request whose preconditions do not hold.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DivisionByZero : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Vanishing weight denominator: the parameters are not semisimple for this shape.
struct DegenerateWeight : PreconditionError {
    using PreconditionError::PreconditionError;
};

// An internal consistency check failed.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace young
