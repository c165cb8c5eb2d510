#pragma once

#include <stdexcept>
#include <string>

namespace sqheat {

// Argument outside the mathematical domain of an operation (negative
// squeezing, non-positive temperature, unphysical covariance matrix, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure failed to reach its requested accuracy or an
// integrated trajectory left the physical region.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bookkeeping identity that must hold by construction was violated.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid user input at the configuration / command-line level.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqheat
