#include "freedom/error.hpp"

#include <algorithm>

namespace freedom {

namespace {

std::string join(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += to_string(v.kind);
    if (!v.detail.empty()) {
      out += ": ";
      out += v.detail;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundOrder: return "BoundOrder";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::TooFewOptions: return "TooFewOptions";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidPerturbation: return "InvalidPerturbation";
    case ErrorKind::NotVacuous: return "NotVacuous";
    case ErrorKind::DegenerateCell: return "DegenerateCell";
    case ErrorKind::FrechetViolation: return "FrechetViolation";
    case ErrorKind::JointInconsistent: return "JointInconsistent";
    case ErrorKind::TooManyCells: return "TooManyCells";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : Error(std::vector<Violation>{{kind, std::move(detail)}}) {}

Error::Error(std::vector<Violation> violations)
    : std::runtime_error(join(violations)), violations_(std::move(violations)) {
  if (violations_.empty()) throw std::logic_error("Error without violations");
}

bool Error::has(ErrorKind kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

}  // namespace freedom
