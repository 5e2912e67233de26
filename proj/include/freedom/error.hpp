#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freedom {

enum class ErrorKind {
  BoundOrder,
  Infeasible,
  RangeError,
  TooFewOptions,
  ShapeMismatch,
  CapExceeded,
  DomainError,
  WrongDimension,
  IndexOutOfRange,
  InvalidPerturbation,
  NotVacuous,
  DegenerateCell,
  FrechetViolation,
  JointInconsistent,
  TooManyCells,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

struct Violation {
  ErrorKind kind;
  std::string detail;
};

/// Library-wide exception. Carries every invariant violation found while
/// checking an input, so callers can report all of them at once.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);
  explicit Error(std::vector<Violation> violations);

  ErrorKind kind() const { return violations_.front().kind; }
  const std::vector<Violation>& violations() const { return violations_; }
  bool has(ErrorKind kind) const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace freedom
