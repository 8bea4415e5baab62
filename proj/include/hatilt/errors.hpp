#pragma once

#include <stdexcept>
#include <string>

namespace hatilt {

/// An argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size or time limit was hit before the computation finished.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search that is guaranteed to succeed did not; points at a bug.
class SearchFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hatilt
