#ifndef COREIDEAL_ERRORS_HPP
#define COREIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coreideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arithmetic or malformed algebraic input (zero divisor, ring
/// mismatch, degree overflow, non-prime characteristic, ...).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Spec-file and expression parse errors, anchored at line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A computed result contradicts a theorem that must hold under the standing
/// hypotheses. Indicates a genericity failure or an engine bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Independent re-samplings of a "general" quantity disagreed, or sampling
/// never produced a usable object.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace coreideal

#endif  // COREIDEAL_ERRORS_HPP
