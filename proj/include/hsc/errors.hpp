#pragma once

#include <stdexcept>
#include <string>

namespace hsc {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct PreconditionViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An internal identity that must hold by construction failed.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hsc
