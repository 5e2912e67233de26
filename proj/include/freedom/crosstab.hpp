#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "freedom/assignment.hpp"
#include "freedom/oracle.hpp"

namespace freedom {

/// Joint sampling is rejected above this many cells.
inline constexpr std::size_t kMaxJointCells = 12;

using Matrix = std::vector<std::vector<double>>;

/// Fréchet-style bounds on the joint necessity and possibility of a cell
/// given its row and column marginal bounds.
struct CellBounds {
  double ne_lower, ne_upper;
  double po_lower, po_upper;
};

CellBounds cell_bounds(double ne_row, double po_row, double ne_col, double po_col);

/// Position of p_ij between max(0, p_row + p_col - 1) (D = 0, maximally
/// disjoint) and min(p_row, p_col) (D = 1, maximally overlapped).
double dependency(double p_ij, double p_row, double p_col);

enum class CaseTag { case1, case2, case3a, case3b, boundary };

std::string_view to_string(CaseTag tag);

struct CellCase {
  CaseTag tag;
  std::optional<int> d_maximizing;  // dependency (0 or 1) that widens the cell most
};

/// case1: ne_row + ne_col > 1. case2: po_row + po_col < 1.
/// Otherwise 1 - min(ne) is compared with max(po): greater is case3a,
/// smaller case3b, equal boundary.
CellCase classify_cell(double ne_row, double po_row, double ne_col, double po_col);

/// Width of the range of d * A + (1 - d) * B as the cell's marginals vary
/// over their intervals, with A = min(x, y) and B = max(0, x + y - 1).
double cell_width_vs_dependency(double ne_row, double po_row, double ne_col, double po_col,
                                double d);

/// Cross-classification of a K-option and an M-option system. Either side
/// may have a single option (a degenerate margin).
class CrossTable {
 public:
  /// Validates the joint table against the margins when present; throws
  /// freedom::Error listing every problem found.
  CrossTable(IntervalAssignment rows, IntervalAssignment cols, std::optional<Matrix> joint = {});

  const IntervalAssignment& rows() const { return rows_; }
  const IntervalAssignment& cols() const { return cols_; }
  const std::optional<Matrix>& joint() const { return joint_; }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

 private:
  IntervalAssignment rows_;
  IntervalAssignment cols_;
  std::optional<Matrix> joint_;
};

/// Marginal validation for cross tables (permits one-option margins).
IntervalAssignment validate_margin(const std::vector<double>& ne, const std::vector<double>& po,
                                   const std::vector<std::string>& labels = {});

/// Cells (row, col), zero-based, with ne_row + ne_col > 1.
std::vector<std::pair<std::size_t, std::size_t>> case1_census(const CrossTable& t);

/// Fraction of the (KM-1)-simplex of joint tables whose row and column sums
/// respect the marginal bounds. Throws TooManyCells above kMaxJointCells.
MCEstimate mc_joint_freedom(const CrossTable& t, std::uint64_t samples, std::uint64_t seed,
                            Execution execution = Execution::parallel);

}  // namespace freedom
