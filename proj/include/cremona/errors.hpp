#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Raised when an input violates a precondition of an operation
/// (index out of range, degree mismatch, division by zero).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a named numerical constraint fails during construction,
/// e.g. a non-integral basis-change entry.
class ConstraintViolation : public std::runtime_error {
 public:
  ConstraintViolation(std::string constraint, const std::string& detail)
      : std::runtime_error(constraint + ": " + detail), constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// Arithmetic between divisor classes written in different charts.
class ChartMismatch : public std::logic_error {
 public:
  explicit ChartMismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cremona
