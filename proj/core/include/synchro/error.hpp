#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synchro {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument failed (letter out of range, universe mismatch, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed automaton text. Line and column are 1-based; 0 means "unknown".
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

/// An input is too large for an exhaustive procedure.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// The automaton does not satisfy the hypotheses required by an analysis.
class HypothesisError : public Error {
public:
    using Error::Error;
};

}  // namespace synchro
