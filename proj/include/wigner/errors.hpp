#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

// Two operator expressions were built with different values of hbar.
class UnitMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text rejected by the expression language. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Well-formed expression that cannot be lowered to an exact operator
// (e.g. an unpaired ladder symbol carrying 1/sqrt(2)).
class ElaborationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The phase-space box truncates the state: boundary values are too large.
class GridTooSmall : public std::runtime_error {
 public:
  GridTooSmall(const std::string& what, double boundary_ratio)
      : std::runtime_error(what), boundary_ratio_(boundary_ratio) {}
  double boundary_ratio() const noexcept { return boundary_ratio_; }

 private:
  double boundary_ratio_;
};

// NaN or Inf produced while time stepping.
class NumericBlowup : public std::runtime_error {
 public:
  NumericBlowup(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
  double time() const noexcept { return t_; }

 private:
  double t_;
};

// Invalid run configuration (schema, ranges, stability bound).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wigner
