#pragma once

#include <stdexcept>
#include <string>

namespace dcorr {

/// Caller passed arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A rational-function denominator vanished at a numeric evaluation point.
/// Callers working in evaluation mode are expected to retry with a new point.
class EvaluationPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal invariant failed (e.g. a division that must be exact was not).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dcorr
