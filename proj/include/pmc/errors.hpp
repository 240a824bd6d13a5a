#pragma once

#include <stdexcept>
#include <string>

namespace pmc {

/// Raised when caller-supplied data violates a documented precondition
/// (bad rank, parity violation, malformed JSON payload, ...).
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when two independent computations of the same quantity disagree,
/// or when a structure that must be closed turns out not to be.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Raised when an enumeration exceeds its configured element ceiling.
class LimitExceeded : public std::runtime_error {
public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pmc
