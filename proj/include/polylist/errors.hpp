#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace polylist {

/// Base of every error raised by the library.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain/codomain mismatch, wrong arity, malformed object.
class StructuralError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// A constraint or cone condition failed on a concrete witness.
class ConstraintError : public ModelError {
 public:
  ConstraintError(const std::string& what, std::string witness)
      : ModelError(what + " (witness " + witness + ")"), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// case_merge parts do not partition the domain.
class CoverageError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Search space or fiber larger than the budget allows.
/// Whole-number rendering of a (possibly huge) size estimate.
inline std::string size_string(long double n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0Lf", n);
  return buf;
}

class BudgetError : public ModelError {
 public:
  BudgetError(const std::string& what, std::string size)
      : ModelError(what + " (size " + size + ")"), size_(std::move(size)) {}
  const std::string& size() const noexcept { return size_; }

 private:
  std::string size_;
};

/// Typing failure in the term language.
class TypeError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public ModelError {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : ModelError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An internal self-check failed; indicates a bug rather than bad input.
class DefectError : public ModelError {
 public:
  using ModelError::ModelError;
};

}  // namespace polylist
