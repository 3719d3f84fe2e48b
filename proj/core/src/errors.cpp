#include "semipath/errors.hpp"

namespace semipath {

std::string_view to_string(SolverErrorKind kind) noexcept {
  switch (kind) {
    case SolverErrorKind::closure_undefined:
      return "closure-undefined";
    case SolverErrorKind::inverse_undefined:
      return "inverse-undefined";
    case SolverErrorKind::not_stabilized:
      return "not-stabilized";
  }
  return "unknown";
}

namespace {

std::string describe(SolverErrorKind kind, std::size_t step, const std::string& detail) {
  std::string msg{to_string(kind)};
  msg += " at step ";
  msg += std::to_string(step);
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

SolverError::SolverError(SolverErrorKind kind, std::size_t step)
    : SolverError(kind, step, std::string{}) {}

SolverError::SolverError(SolverErrorKind kind, std::size_t step, const std::string& detail)
    : std::runtime_error(describe(kind, step, detail)), kind_(kind), step_(step) {}

}  // namespace semipath
