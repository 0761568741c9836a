#pragma once

#include <stdexcept>
#include <string>

namespace ndist {

/// Invalid arguments: dimension mismatch, bad parameters, malformed input.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well formed but outside the supported (n, q) envelope of an algorithm.
class UnsupportedScaleError : public std::domain_error {
 public:
  explicit UnsupportedScaleError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical routine was called outside its precondition (e.g. no sign change).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// A simplex sum vanished while the distance itself is positive.
class DistanceViolation : public std::runtime_error {
 public:
  explicit DistanceViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ndist
