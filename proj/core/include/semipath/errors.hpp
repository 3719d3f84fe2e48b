#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semipath {

/// Operands of a matrix operation have incompatible dimensions.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requires a capability (e.g. idempotency) the semiring lacks.
class UnsupportedInstance : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input exceeds a hard size bound of an exhaustive routine.
class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class SolverErrorKind {
  closure_undefined,
  inverse_undefined,
  not_stabilized,
};

std::string_view to_string(SolverErrorKind kind) noexcept;

/// A partial scalar operation was undefined inside a solver, or an
/// iterative sum failed to reach a fixed point. `step()` is the 1-based
/// recursion step at which the failure happened (0 for initialisation).
class SolverError : public std::runtime_error {
 public:
  SolverError(SolverErrorKind kind, std::size_t step);
  SolverError(SolverErrorKind kind, std::size_t step, const std::string& detail);

  SolverErrorKind kind() const noexcept { return kind_; }
  std::size_t step() const noexcept { return step_; }

 private:
  SolverErrorKind kind_;
  std::size_t step_;
};

}  // namespace semipath
