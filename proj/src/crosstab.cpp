#include "freedom/crosstab.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "chunked_sampler.hpp"
#include "freedom/error.hpp"

namespace freedom {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void check_margin_values(double ne_row, double po_row, double ne_col, double po_col) {
  std::vector<Violation> violations;
  for (double v : {ne_row, po_row, ne_col, po_col}) {
    if (!std::isfinite(v) || v < -kTolerance || v > 1.0 + kTolerance) {
      violations.push_back({ErrorKind::RangeError, "bound " + num(v) + " outside [0,1]"});
    }
  }
  if (ne_row > po_row + kTolerance || ne_col > po_col + kTolerance) {
    violations.push_back({ErrorKind::RangeError, "necessity above possibility in a margin"});
  }
  if (!violations.empty()) throw Error(std::move(violations));
}

// Row and column sums add rounding from the cell spacings; a single-option
// margin with po = 1 would otherwise reject samples whose sum lands one ulp
// above 1.
constexpr double kSumSlack = 1e-12;

std::string cell_name(std::size_t i, std::size_t j) {
  return "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

CellBounds cell_bounds(double ne_row, double po_row, double ne_col, double po_col) {
  check_margin_values(ne_row, po_row, ne_col, po_col);
  return CellBounds{
      .ne_lower = std::max(0.0, ne_row + ne_col - 1.0),
      .ne_upper = std::min(ne_row, ne_col),
      .po_lower = std::max(0.0, po_row + po_col - 1.0),
      .po_upper = std::min(po_row, po_col),
  };
}

double dependency(double p_ij, double p_row, double p_col) {
  const double upper = std::min(p_row, p_col);
  const double lower = std::max(0.0, p_row + p_col - 1.0);
  if (upper - lower <= kTolerance) {
    throw Error(ErrorKind::DegenerateCell, "Fréchet interval [" + num(lower) + ", " + num(upper) +
                                               "] has no width");
  }
  if (p_ij < lower - kTolerance || p_ij > upper + kTolerance) {
    throw Error(ErrorKind::FrechetViolation,
                "p = " + num(p_ij) + " outside [" + num(lower) + ", " + num(upper) + "]");
  }
  return std::clamp((p_ij - lower) / (upper - lower), 0.0, 1.0);
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::case1: return "case1";
    case CaseTag::case2: return "case2";
    case CaseTag::case3a: return "case3a";
    case CaseTag::case3b: return "case3b";
    case CaseTag::boundary: return "boundary";
  }
  return "boundary";
}

CellCase classify_cell(double ne_row, double po_row, double ne_col, double po_col) {
  check_margin_values(ne_row, po_row, ne_col, po_col);
  if (ne_row + ne_col > 1.0 + kTolerance) return {CaseTag::case1, 0};
  if (po_row + po_col < 1.0 - kTolerance) return {CaseTag::case2, 1};
  // Width at D = 0 minus width at D = 1 is max(po) + min(ne) - 1 here, so a
  // large 1 - min(ne) favours full overlap, continuing case2; a small one
  // favours disjointness, continuing case1.
  const double gap = (1.0 - std::min(ne_row, ne_col)) - std::max(po_row, po_col);
  if (gap > kTolerance) return {CaseTag::case3a, 1};
  if (gap < -kTolerance) return {CaseTag::case3b, 0};
  return {CaseTag::boundary, std::nullopt};
}

double cell_width_vs_dependency(double ne_row, double po_row, double ne_col, double po_col,
                                double d) {
  check_margin_values(ne_row, po_row, ne_col, po_col);
  if (!(d >= 0.0 && d <= 1.0)) {
    throw Error(ErrorKind::RangeError, "dependency " + num(d) + " outside [0,1]");
  }
  // Both min(x, y) and max(0, x + y - 1) are nondecreasing in x and y, so
  // the extremes sit at the lower and upper marginal corners.
  auto pinned = [d](double x, double y) {
    return d * std::min(x, y) + (1.0 - d) * std::max(0.0, x + y - 1.0);
  };
  return std::max(0.0, pinned(po_row, po_col) - pinned(ne_row, ne_col));
}

IntervalAssignment validate_margin(const std::vector<double>& ne, const std::vector<double>& po,
                                   const std::vector<std::string>& labels) {
  return validate(ne, po, labels, {.mass = 1.0, .min_options = 1});
}

CrossTable::CrossTable(IntervalAssignment rows, IntervalAssignment cols, std::optional<Matrix> joint)
    : rows_(std::move(rows)), cols_(std::move(cols)), joint_(std::move(joint)) {
  if (!joint_) return;
  const Matrix& p = *joint_;
  const std::size_t k = rows_.size();
  const std::size_t m = cols_.size();
  std::vector<Violation> violations;
  if (p.size() != k || std::any_of(p.begin(), p.end(), [m](const auto& r) { return r.size() != m; })) {
    violations.push_back({ErrorKind::ShapeMismatch, "joint table must be " + std::to_string(k) +
                                                        "x" + std::to_string(m)});
    throw Error(std::move(violations));
  }

  std::vector<double> row_sum(k, 0.0), col_sum(m, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = p[i][j];
      if (!std::isfinite(v) || v < -kTolerance || v > 1.0 + kTolerance) {
        violations.push_back({ErrorKind::RangeError, cell_name(i, j) + " = " + num(v)});
      }
      const double lower = std::max(0.0, rows_.ne(i) + cols_.ne(j) - 1.0);
      const double upper = std::min(rows_.po(i), cols_.po(j));
      if (v < lower - kTolerance || v > upper + kTolerance) {
        violations.push_back({ErrorKind::FrechetViolation, cell_name(i, j) + " = " + num(v) +
                                                               " outside [" + num(lower) + ", " +
                                                               num(upper) + "]"});
      }
      row_sum[i] += v;
      col_sum[j] += v;
      total += v;
    }
  }
  if (std::abs(total - 1.0) > kTolerance) {
    violations.push_back({ErrorKind::JointInconsistent, "joint sums to " + num(total)});
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (row_sum[i] < rows_.ne(i) - kTolerance || row_sum[i] > rows_.po(i) + kTolerance) {
      violations.push_back({ErrorKind::JointInconsistent,
                            "row " + rows_.label(i) + " sums to " + num(row_sum[i]) +
                                ", outside [" + num(rows_.ne(i)) + ", " + num(rows_.po(i)) + "]"});
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (col_sum[j] < cols_.ne(j) - kTolerance || col_sum[j] > cols_.po(j) + kTolerance) {
      violations.push_back({ErrorKind::JointInconsistent,
                            "column " + cols_.label(j) + " sums to " + num(col_sum[j]) +
                                ", outside [" + num(cols_.ne(j)) + ", " + num(cols_.po(j)) + "]"});
    }
  }
  if (!violations.empty()) throw Error(std::move(violations));
}

std::vector<std::pair<std::size_t, std::size_t>> case1_census(const CrossTable& t) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    for (std::size_t j = 0; j < t.col_count(); ++j) {
      if (t.rows().ne(i) + t.cols().ne(j) > 1.0 + kTolerance) cells.emplace_back(i, j);
    }
  }
  return cells;
}

MCEstimate mc_joint_freedom(const CrossTable& t, std::uint64_t samples, std::uint64_t seed,
                            Execution execution) {
  const std::size_t k = t.row_count();
  const std::size_t m = t.col_count();
  if (k * m > kMaxJointCells) {
    throw Error(ErrorKind::TooManyCells, std::to_string(k) + "x" + std::to_string(m) +
                                             " table exceeds " + std::to_string(kMaxJointCells) +
                                             " cells");
  }
  const auto rne = t.rows().ne();
  const auto rpo = t.rows().po();
  const auto cne = t.cols().ne();
  const auto cpo = t.cols().po();
  const std::uint64_t hits = detail::count_accepted(
      k * m, 1.0, samples, seed, execution, [=](std::span<const double> cells) {
        for (std::size_t i = 0; i < k; ++i) {
          double s = 0.0;
          for (std::size_t j = 0; j < m; ++j) s += cells[i * m + j];
          if (s < rne[i] - kSumSlack || s > rpo[i] + kSumSlack) return false;
        }
        for (std::size_t j = 0; j < m; ++j) {
          double s = 0.0;
          for (std::size_t i = 0; i < k; ++i) s += cells[i * m + j];
          if (s < cne[j] - kSumSlack || s > cpo[j] + kSumSlack) return false;
        }
        return true;
      });
  return detail::make_estimate(hits, samples, seed);
}

}  // namespace freedom
