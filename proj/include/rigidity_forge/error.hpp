#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rigidity_forge {

/// Base class for every error raised by the library. Callers that only need
/// to distinguish "bad input" from bugs can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition or parameter violation (wrong dimension, out-of-range vertex, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed graph text. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace rigidity_forge
