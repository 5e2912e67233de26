#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "freedom/assignment.hpp"

namespace freedom {

/// Limits the inclusion-exclusion expansion, which has 2^M terms.
struct FreedomOptions {
  std::size_t max_options = 24;
  bool force = false;
};

/// Fraction of the probability simplex left by the interval bounds.
/// Computed on the tightened assignment; 1 for vacuous, 0 for any
/// assignment that pins a coordinate. Throws CapExceeded past the cap.
double freedom(const IntervalAssignment& a, const FreedomOptions& options = {});

/// Unnormalized conditional freedom: the inclusion-exclusion sum with the
/// leading 1 replaced by the remaining mass q, i.e. the volume of the
/// bounded part of {p >= 0, sum p = q} in units where the full q-simplex
/// has volume q^(K-1). Equals freedom(a) when q = 1.
double freedom_conditional(const IntervalAssignment& a, double q,
                           const FreedomOptions& options = {});

/// freedom^(1/(M-1)).
double normed_freedom(const IntervalAssignment& a, const FreedomOptions& options = {});

// Both rival measures look only at the possibility vector, sorted
// descending with ties kept.
double yager_ambiguity(const IntervalAssignment& a);
double hartley_nonspecificity(const IntervalAssignment& a);

struct MeasureReport {
  double freedom;
  double yager_ambiguity;
  double hartley_nonspecificity;  // bits
  double normed_freedom;
  std::size_t m;
};

MeasureReport measure_report(const IntervalAssignment& a, const FreedomOptions& options = {});

struct SubsetEntry {
  std::vector<std::size_t> options;  // retained option indices, ascending
  double q;                          // mass left after the point-valued complement
  double conditional_freedom;        // unnormalized
};

struct SubsetScan {
  std::vector<SubsetEntry> entries;
  std::size_t omitted = 0;  // proper subsets whose complement is not point-valued
};

/// Conditional freedom of every proper subset (size >= 2) whose complement
/// is entirely point-valued in the tightened assignment. Requires M >= 3.
SubsetScan subset_scan(const IntervalAssignment& a, const FreedomOptions& options = {});

namespace detail {

/// sum over T of (-1)^|T| max(0, mass - sum_T po - sum_{not T} ne)^(n-1),
/// for arbitrary box bounds. Zero-width and empty regions short-circuit to 0.
double box_simplex_volume(std::span<const double> ne, std::span<const double> po, double mass);

}  // namespace detail

}  // namespace freedom
