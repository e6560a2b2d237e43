#pragma once

#include <stdexcept>
#include <string>

namespace tjurina {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition or unusable input value (wrong dimensions,
// unknown variable, point not on the variety, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Syntax error in an expression, presentation file or resolution script.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  explicit ParseError(const std::string& what) : Error(what), line(0), column(0) {}
  std::size_t line;
  std::size_t column;
};

// A Groebner computation exceeded its configured pair or degree budget.
// Raised instead of ever returning a truncated (silently wrong) basis.
struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

}  // namespace tjurina
