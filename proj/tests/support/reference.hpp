#pragma once

// Independent reference computations used as test oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>

namespace freedom::testing {

/// Plain 2^M enumeration of the inclusion-exclusion sum over raw bounds,
/// with no tightening, pruning, or short-circuits.
inline double brute_force_freedom(std::span<const double> ne, std::span<const double> po,
                                  double mass = 1.0) {
  const std::size_t m = ne.size();
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double s = mass;
    int bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) {
        s -= po[i];
        ++bits;
      } else {
        s -= ne[i];
      }
    }
    const double term = std::pow(std::max(0.0, s), static_cast<double>(m - 1));
    total += (bits % 2 == 0) ? term : -term;
  }
  return total;
}

/// Width of {d min(x,y) + (1-d) max(0,x+y-1)} over an n-by-n grid of the
/// marginal rectangle.
inline double grid_cell_width(double ne_row, double po_row, double ne_col, double po_col, double d,
                              int n = 100) {
  double lo = 1e300, hi = -1e300;
  for (int a = 0; a < n; ++a) {
    const double x = ne_row + (po_row - ne_row) * a / (n - 1);
    for (int b = 0; b < n; ++b) {
      const double y = ne_col + (po_col - ne_col) * b / (n - 1);
      const double v = d * std::min(x, y) + (1.0 - d) * std::max(0.0, x + y - 1.0);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return hi - lo;
}

}  // namespace freedom::testing
