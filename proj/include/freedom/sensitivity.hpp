#pragma once

#include <cstddef>
#include <string_view>

#include "freedom/assignment.hpp"
#include "freedom/measures.hpp"

namespace freedom {

/// Loss differences within this band are reported as a tie.
inline constexpr double kTieBand = 1e-9;

enum class Verdict { po_dominates, ne_dominates, tie };

std::string_view to_string(Verdict v);

/// Freedom lost by tightening coordinate `index` from either side.
/// Indices are zero-based.
struct SensitivityReport {
  std::size_t index;
  double delta;
  double loss_from_po;
  double loss_from_ne;
  bool condition_holds;  // dominance_condition(a, index)
  bool balance_holds;    // balance_condition(a)
  Verdict verdict;
};

/// sum_{i != k} ne_i < 1 - sum_{i != k} po_i: the classical condition under
/// which a cut on po_k should remove more freedom than the opposite cut on ne_k.
bool dominance_condition(const IntervalAssignment& a, std::size_t k);

/// sum_i (ne_i + po_i) < 2, i.e. the bound midpoints sum to less than one.
/// Reduces to dominance_condition when ne_k + po_k = 1.
bool balance_condition(const IntervalAssignment& a);

/// Compares F after po_k -= delta against F after ne_k += delta.
/// Throws InvalidPerturbation if either perturbed assignment is invalid.
SensitivityReport impact_compare(const IntervalAssignment& a, std::size_t k, double delta,
                                 const FreedomOptions& options = {});

/// Coordinate k must be vacuous; compares imposing po_k = 1 - eps against
/// imposing ne_k = eps.
SensitivityReport imposition_compare(const IntervalAssignment& a, std::size_t k, double eps,
                                     const FreedomOptions& options = {});

}  // namespace freedom
