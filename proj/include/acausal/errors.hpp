#pragma once

#include <stdexcept>
#include <string>

namespace acausal {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Incompatible shapes, out-of-range indices, malformed files.
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

class DimensionMismatchError : public InvalidInputError {
 public:
  explicit DimensionMismatchError(const std::string& what)
      : InvalidInputError(what) {}
};

// A composition or normalization check failed at run time; carries the
// observed total so the caller can report the deficit.
class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& what) : Error(what) {}
};

// A configured time or size budget was exceeded; no partial results
// are emitted.
class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

// An internal cross-check failed (e.g. the dimension formula disagrees
// with the computed rank). Indicates a bug, never bad user input.
class InternalCheckError : public Error {
 public:
  explicit InternalCheckError(const std::string& what) : Error(what) {}
};

}  // namespace acausal
