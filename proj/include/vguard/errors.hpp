#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vguard {

/// Raised when a predicate receives a degenerate segment (coincident endpoints).
class DegenerateSegment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A failure that valid input can never trigger. Carries a textual dump of
/// the working state so the instance can be preserved as a counterexample.
class InternalFailure : public std::runtime_error {
 public:
  InternalFailure(const std::string& what, std::string state)
      : std::runtime_error(what), state_(std::move(state)) {}

  const std::string& state() const noexcept { return state_; }

 private:
  std::string state_;
};

class NoSpecialTriangleFound : public InternalFailure {
 public:
  using InternalFailure::InternalFailure;
};

class TriangulationFailed : public InternalFailure {
 public:
  using InternalFailure::InternalFailure;
};

class DualNotTree : public InternalFailure {
 public:
  using InternalFailure::InternalFailure;
};

}  // namespace vguard
