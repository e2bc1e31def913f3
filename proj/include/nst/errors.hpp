#pragma once

#include <stdexcept>
#include <string>

namespace nst {

/// Bad input: unknown vertex, malformed file, violated precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded search ran out of budget before reaching its goal.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Refusal to run an exponential routine on an input above its size guard.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An engine invariant failed. Always a bug, never an input problem.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nst
