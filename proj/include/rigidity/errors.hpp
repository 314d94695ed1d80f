#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rigidity {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; `offset` is the byte position of the problem.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Matrix shape mismatch (e.g. determinant of a non-square matrix).
struct DimensionError : Error {
    using Error::Error;
};

// Input is outside the supported problem size (n > 62 graph6, n > 8 enumeration).
struct ScopeError : Error {
    using Error::Error;
};

// A rank-r request on a matrix of rank < r.
struct RankDeficiencyError : Error {
    using Error::Error;
};

// Sampled or supplied points fail a genericity requirement.
struct GenericityError : Error {
    using Error::Error;
};

// Caller violated a documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// A constructed object failed its own invariants.
struct ValidationError : Error {
    using Error::Error;
};

// Internal consistency failure; carries reproduction data in the message.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace rigidity
