#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed input. line() is 1-based, 0 when the position is unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input that is well-formed but has no meaningful layout (n < 2, m = 0,
// all vertices coincident).
class DegenerateError : public Error {
public:
    using Error::Error;
};

// A NaN or infinity escaped a computation that should be finite.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace snb
