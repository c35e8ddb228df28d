#pragma once

#include <stdexcept>
#include <string>

namespace qkhook {

/// Invalid user-level input: a malformed shape, an out-of-range argument, a
/// hook that does not fit. Distinct from internal conformance failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reasons a part list fails to describe a quantum shape.
enum class ShapeViolation {
  kLengthMismatch,
  kNotDecreasing,
  kWrapConstraint,
};

class ShapeError : public InputError {
 public:
  ShapeError(ShapeViolation kind, const std::string& what) : InputError(what), kind_(kind) {}
  ShapeViolation kind() const noexcept { return kind_; }

 private:
  ShapeViolation kind_;
};

class ContextMismatch : public InputError {
 public:
  ContextMismatch() : InputError("shapes belong to different Grassmannians") {}
};

}  // namespace qkhook
