#pragma once

#include <stdexcept>
#include <string>

namespace permspec {

// Caller passed arguments that violate an operation's contract
// (degree mismatch, non-square matrix, unknown registry key, ...).
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a configured resource cap (degree, dimension, symbolic size).
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Certification could not be set up (e.g. retry budget for a collision-free
// assignment exhausted).
struct SetupError : std::runtime_error {
  explicit SetupError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace permspec
