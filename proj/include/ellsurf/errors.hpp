#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellsurf {

// Error taxonomy shared by the whole library. Every contract violation named
// in the public API maps onto one of these so callers can dispatch by type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the operation's domain (zero polynomial where nonzero is
// required, degenerate surface, ...).
struct DegenerateInput : Error {
    using Error::Error;
};

// Prime unusable for the requested mod-p computation.
struct BadPrime : Error {
    using Error::Error;
};

// Modulus of a number field is reducible, constant or too large.
struct InvalidModulus : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Polynomial shapes outside what the closed formulas support.
struct UnsupportedShape : Error {
    using Error::Error;
};

struct PointNotOnCurve : Error {
    using Error::Error;
};

// An internal guarantee failed; indicates a bug or corrupted state.
struct InvariantViolation : Error {
    using Error::Error;
};

struct BadSpecialization : Error {
    using Error::Error;
};

// Family generator parameters violate a stated precondition.
struct DegenerateParameters : Error {
    using Error::Error;
};

// Non-square declared but no refuting prime found below the search cap.
struct NoWitnessFound : Error {
    using Error::Error;
};

struct VariableMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off) : Error(msg), offset(off) {}
};

}  // namespace ellsurf
