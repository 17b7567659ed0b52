#pragma once

#include <stdexcept>
#include <string>

namespace dpz {

// Malformed user input: bad dimensions, non-isometries, unknown names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested operation is outside the supported range (e.g. conjugacy search for n = 8).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-width integer arithmetic would overflow.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace dpz
