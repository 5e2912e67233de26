#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freedom {

/// Absolute tolerance for every invariant comparison on bounds.
inline constexpr double kTolerance = 1e-9;

struct ValidateOptions {
  /// Total probability the options share; 1 for a full system, q < 1 for a
  /// sub-system left over after point assignments elsewhere.
  double mass = 1.0;
  std::size_t min_options = 2;
};

/// Per-option necessity/possibility bounds ne_i <= p_i <= po_i over options
/// whose probabilities sum to mass(). Only obtainable through validate() or
/// tighten(), so every instance satisfies the feasibility invariants.
class IntervalAssignment {
 public:
  std::size_t size() const { return ne_.size(); }
  double mass() const { return mass_; }

  std::span<const double> ne() const { return ne_; }
  std::span<const double> po() const { return po_; }
  std::span<const std::string> labels() const { return labels_; }

  double ne(std::size_t i) const { return ne_[i]; }
  double po(std::size_t i) const { return po_[i]; }
  double width(std::size_t i) const { return po_[i] - ne_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  bool operator==(const IntervalAssignment&) const = default;

 private:
  IntervalAssignment(std::vector<std::string> labels, std::vector<double> ne,
                     std::vector<double> po, double mass)
      : labels_(std::move(labels)), ne_(std::move(ne)), po_(std::move(po)), mass_(mass) {}

  friend IntervalAssignment validate(const std::vector<double>&, const std::vector<double>&,
                                     const std::vector<std::string>&, const ValidateOptions&);
  friend IntervalAssignment tighten(const IntervalAssignment&);

  std::vector<std::string> labels_;
  std::vector<double> ne_;
  std::vector<double> po_;
  double mass_;
};

/// Checks bounds and feasibility; throws freedom::Error listing every
/// violated invariant. Values within kTolerance outside [0,1] are clamped.
/// Empty labels are generated as opt1..optM.
IntervalAssignment validate(const std::vector<double>& ne, const std::vector<double>& po,
                            const std::vector<std::string>& labels = {},
                            const ValidateOptions& options = {});

/// Shrinks each bound to the value actually reachable inside the feasible
/// region: po_i' = min(po_i, mass - sum_{j!=i} ne_j), ne_i' = max(ne_i, mass - sum_{j!=i} po_j).
IntervalAssignment tighten(const IntervalAssignment& a);

enum class AssignmentClass { vacuous, point, partial };

std::string_view to_string(AssignmentClass c);

/// Evaluated on the tightened form.
AssignmentClass classify(const IntervalAssignment& a);

}  // namespace freedom
