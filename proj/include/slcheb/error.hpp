#pragma once

#include <stdexcept>
#include <string>

namespace slcheb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression syntax error; `position` is a 0-based offset into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position(position) {}

    std::size_t position;
};

/// Numeric domain error during expression evaluation (division by zero,
/// ln of a nonpositive value, sqrt of a negative value, ...).
class EvalError : public Error {
public:
    EvalError(const std::string& message, std::string subexpression, double x)
        : Error(message + " in '" + subexpression + "' at x=" + std::to_string(x)),
          subexpression(std::move(subexpression)),
          x(x) {}

    std::string subexpression;
    double x;
};

}  // namespace slcheb
