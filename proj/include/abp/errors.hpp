#pragma once

#include <stdexcept>
#include <string>

namespace abp {

// Invalid arguments, malformed input, or an operation applied outside its
// domain (division by zero, mixed fields, degree mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force or expansion routine refused to run because its output
// would exceed the configured size bound.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abp
