#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadVertex : Error {
    using Error::Error;
};

struct BadLabel : Error {
    using Error::Error;
};

struct DuplicateEdge : Error {
    using Error::Error;
};

struct TooSmall : Error {
    using Error::Error;
};

// Enumeration refused: the space exceeds the configured budget.
struct TooLarge : Error {
    using Error::Error;
};

struct BadForbidCount : Error {
    using Error::Error;
};

struct BadPredicate : Error {
    using Error::Error;
};

struct BadSamples : Error {
    using Error::Error;
};

// Maximal-clique enumeration hit its budget; the answer was not computed.
struct CliqueBudgetExceeded : Error {
    using Error::Error;
};

// Malformed textual input. `position` is a byte offset into the input.
struct ParseError : Error {
    std::size_t position;

    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at byte " + std::to_string(pos) + ")"), position(pos) {}
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace artin
