#pragma once

#include <stdexcept>

namespace lifrec {

//! Invalid argument or inconsistent configuration.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

//! Numerical breakdown (non-finite values, missed-crossing inconsistency).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Unreadable or malformed file.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lifrec
