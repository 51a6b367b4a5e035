#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tambara {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing levels, or a structure map pointed the wrong way.
struct LevelError : Error {
    using Error::Error;
};

// A closed-form identity failed (e.g. a division that must be exact was not).
struct InternalError : Error {
    using Error::Error;
};

struct NegativeCoefficient : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotIncluded : Error {
    using Error::Error;
};

struct RankExceeded : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct BadPrimeSet : Error {
    using Error::Error;
};

struct BadParams : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos)
    {
    }
    std::size_t position;
};

} // namespace tambara
