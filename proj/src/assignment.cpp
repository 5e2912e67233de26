#include "freedom/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "freedom/error.hpp"

namespace freedom {

namespace {

std::string fmt_value(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

IntervalAssignment validate(const std::vector<double>& ne, const std::vector<double>& po,
                            const std::vector<std::string>& labels,
                            const ValidateOptions& options) {
  std::vector<Violation> violations;
  if (ne.size() != po.size()) {
    violations.push_back({ErrorKind::ShapeMismatch, "ne has " + std::to_string(ne.size()) +
                                                        " entries, po has " +
                                                        std::to_string(po.size())});
    throw Error(std::move(violations));
  }
  const std::size_t m = ne.size();
  if (m < options.min_options) {
    violations.push_back({ErrorKind::TooFewOptions, "need at least " +
                                                        std::to_string(options.min_options) +
                                                        " options, got " + std::to_string(m)});
  }
  if (!labels.empty() && labels.size() != m) {
    violations.push_back({ErrorKind::ShapeMismatch, std::to_string(labels.size()) +
                                                        " labels for " + std::to_string(m) +
                                                        " options"});
  }
  if (!(options.mass > 0.0 && options.mass <= 1.0 + kTolerance)) {
    violations.push_back({ErrorKind::DomainError, "mass " + fmt_value(options.mass) +
                                                      " outside (0,1]"});
  }

  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = labels.empty() ? "opt" + std::to_string(i + 1) : labels[i];
  }

  bool ranges_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (auto [value, field] : {std::pair{ne[i], "ne"}, std::pair{po[i], "po"}}) {
      if (!std::isfinite(value) || value < -kTolerance || value > 1.0 + kTolerance) {
        violations.push_back({ErrorKind::RangeError, std::string(field) + " of " + names[i] +
                                                         " = " + fmt_value(value) +
                                                         " outside [0,1]"});
        ranges_ok = false;
      }
    }
    if (ne[i] > po[i] + kTolerance) {
      violations.push_back({ErrorKind::BoundOrder, names[i] + ": ne " + fmt_value(ne[i]) +
                                                       " > po " + fmt_value(po[i])});
    }
  }

  if (ranges_ok && m > 0) {
    const double sum_ne = std::accumulate(ne.begin(), ne.end(), 0.0);
    const double sum_po = std::accumulate(po.begin(), po.end(), 0.0);
    if (sum_ne > options.mass + kTolerance) {
      violations.push_back({ErrorKind::Infeasible, "sum of ne = " + fmt_value(sum_ne) +
                                                       " exceeds " + fmt_value(options.mass)});
    }
    if (sum_po < options.mass - kTolerance) {
      violations.push_back({ErrorKind::Infeasible, "sum of po = " + fmt_value(sum_po) +
                                                       " below " + fmt_value(options.mass)});
    }
  }

  if (!violations.empty()) throw Error(std::move(violations));

  std::vector<double> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = clamp_unit(ne[i]);
    hi[i] = std::max(lo[i], clamp_unit(po[i]));
  }
  return IntervalAssignment(std::move(names), std::move(lo), std::move(hi),
                            std::min(options.mass, 1.0));
}

IntervalAssignment tighten(const IntervalAssignment& a) {
  const std::size_t m = a.size();
  const double sum_ne = std::accumulate(a.ne_.begin(), a.ne_.end(), 0.0);
  const double sum_po = std::accumulate(a.po_.begin(), a.po_.end(), 0.0);
  std::vector<double> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double others_ne = sum_ne - a.ne_[i];
    const double others_po = sum_po - a.po_[i];
    hi[i] = clamp_unit(std::min(a.po_[i], a.mass_ - others_ne));
    lo[i] = clamp_unit(std::max(a.ne_[i], a.mass_ - others_po));
    // Inputs on the feasibility boundary can cross by a rounding error.
    if (lo[i] > hi[i]) lo[i] = hi[i] = 0.5 * (lo[i] + hi[i]);
  }
  return IntervalAssignment(a.labels_, std::move(lo), std::move(hi), a.mass_);
}

std::string_view to_string(AssignmentClass c) {
  switch (c) {
    case AssignmentClass::vacuous: return "vacuous";
    case AssignmentClass::point: return "point";
    case AssignmentClass::partial: return "partial";
  }
  return "partial";
}

AssignmentClass classify(const IntervalAssignment& a) {
  const IntervalAssignment t = tighten(a);
  bool vacuous = true;
  bool point = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.po(i) < 1.0 - kTolerance || t.ne(i) > kTolerance) vacuous = false;
    if (t.width(i) > kTolerance) point = false;
  }
  if (vacuous) return AssignmentClass::vacuous;
  if (point) return AssignmentClass::point;
  return AssignmentClass::partial;
}

}  // namespace freedom
