#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pineta {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in DSL source or an expression, with a 1-based position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A structurally well-formed input that violates a mathematical hypothesis
/// (non-homogeneous relation, non-confluent rewrite system, invalid family
/// parameters, mismatched presentations, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace pineta
