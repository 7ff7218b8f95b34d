#pragma once

#include <stdexcept>
#include <string>

namespace jlab {

// Caller broke an operation's contract (mismatched ground sets, resampling
// a sampled graph, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Stated preconditions of a formula do not hold (e.g. n < 2r - 4).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested object does not fit the configured budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent or malformed constants / run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed family or graph file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the range an operation supports (e.g. B_j with r < 4).
class UnsupportedParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace jlab
