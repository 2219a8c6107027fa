#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

/// Input that violates an operation's preconditions (bad surd, bad prime,
/// mismatched operands, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded search ran past its iteration cap.
class SearchCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rmt
