#pragma once

#include <stdexcept>

namespace genpos {

/// Input violates an operation's precondition (bad dimension, duplicate
/// hyperplanes, instance above an exhaustive limit, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A randomized search ran out of attempts before its certificate passed.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result failed an independent post-check.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace genpos
