#pragma once

#include <stdexcept>
#include <string>

namespace gonality {

/// Operand shapes disagree (variable counts, matrix sizes, point lengths).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic between elements of different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The prime modulus does not exceed a polynomial degree in play.
class CharacteristicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A precondition on the mathematical input failed (point not on X, x not on a line, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The gradient vanishes at the requested point.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A hyperplane section of the tangent cone lost an equation (some f_k restricts to zero).
class DegenerateSection : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An enumeration or matrix construction would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long needed, unsigned long long budget)
      : std::runtime_error(what), needed_(needed), budget_(budget) {}
  unsigned long long needed() const noexcept { return needed_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long needed_;
  unsigned long long budget_;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gonality
