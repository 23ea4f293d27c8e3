#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cordlasso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside the operation's domain: an unknown
/// leaf label, a cord with equal ends, a leaf set too large to enumerate.
class InputError : public Error {
 public:
  using Error::Error;
};

class WeightingError : public Error {
 public:
  enum class Kind { kNotEquidistant, kNotProper, kNegative, kIncomplete };

  WeightingError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Newick or cord-file syntax error. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cordlasso
