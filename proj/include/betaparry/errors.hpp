#pragma once

#include <stdexcept>
#include <string>

namespace betaparry {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root isolation found no real root greater than one.
struct NoRootAboveOneError : Error {
    using Error::Error;
};

// Family parameters violate 1 <= p <= q.
struct InvalidFamilyError : Error {
    using Error::Error;
};

// Binary operation mixed elements of distinct number fields.
struct FieldMismatchError : Error {
    using Error::Error;
};

// Inversion of the zero element.
struct DivisionByZeroError : Error {
    using Error::Error;
};

// Argument outside the declared domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Operation needs a classified orbit but the budget ran out first.
struct IncompleteOrbitError : Error {
    using Error::Error;
};

// Coincidence analysis requires non-integer bases.
struct IntegerBaseError : Error {
    using Error::Error;
};

// Coincidence analysis requires two distinct bases.
struct EqualBasesError : Error {
    using Error::Error;
};

// Normalization of a step function with vanishing integral.
struct ZeroMassError : Error {
    using Error::Error;
};

// Monte Carlo validation with an empty sample.
struct EmptySampleError : Error {
    using Error::Error;
};

} // namespace betaparry
