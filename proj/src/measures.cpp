#include "freedom/measures.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <functional>
#include <numeric>

#include "freedom/error.hpp"

namespace freedom {

namespace {

double int_pow(double base, std::size_t exponent) {
  double result = 1.0;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

void check_cap(std::size_t m, const FreedomOptions& options) {
  if (m > options.max_options && !options.force) {
    throw Error(ErrorKind::CapExceeded,
                std::to_string(m) + " options need 2^" + std::to_string(m) +
                    " inclusion-exclusion terms; cap is " +
                    std::to_string(options.max_options) + " (use force to override)");
  }
}

// Depth-first walk over subsets of the widths. A branch is dropped once its
// residual reaches zero: adding more nonnegative widths keeps every
// max(0, .) term of that branch at zero.
class InclusionExclusion {
 public:
  InclusionExclusion(std::vector<double> widths, std::size_t exponent)
      : widths_(std::move(widths)), exponent_(exponent) {
    std::sort(widths_.begin(), widths_.end(), std::greater<>());
  }

  double sum(double residual) const { return walk(0, residual, 1.0); }

 private:
  double walk(std::size_t next, double residual, double sign) const {
    double total = sign * int_pow(residual, exponent_);
    for (std::size_t i = next; i < widths_.size(); ++i) {
      const double r = residual - widths_[i];
      if (r <= 0.0) continue;
      total += walk(i + 1, r, -sign);
    }
    return total;
  }

  std::vector<double> widths_;
  std::size_t exponent_;
};

std::vector<double> sorted_possibilities(const IntervalAssignment& a) {
  std::vector<double> po(a.po().begin(), a.po().end());
  std::stable_sort(po.begin(), po.end(), std::greater<>());
  po.push_back(0.0);
  return po;
}

// Bounds of a box tightened against total mass; false when the region is
// empty or has a pinned coordinate.
bool tighten_box(std::span<const double> ne, std::span<const double> po, double mass,
                 std::vector<double>& lo, std::vector<double>& hi) {
  const double sum_ne = std::accumulate(ne.begin(), ne.end(), 0.0);
  const double sum_po = std::accumulate(po.begin(), po.end(), 0.0);
  if (sum_ne > mass - kTolerance || sum_po < mass + kTolerance) return false;
  const std::size_t n = ne.size();
  lo.resize(n);
  hi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    hi[i] = std::min(po[i], mass - (sum_ne - ne[i]));
    lo[i] = std::max(ne[i], mass - (sum_po - po[i]));
    if (hi[i] - lo[i] <= kTolerance) return false;
  }
  return true;
}

}  // namespace

namespace detail {

double box_simplex_volume(std::span<const double> ne, std::span<const double> po, double mass) {
  std::vector<double> lo, hi;
  if (ne.size() < 2 || !tighten_box(ne, po, mass, lo, hi)) return 0.0;
  std::vector<double> widths(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) widths[i] = hi[i] - lo[i];
  const double residual = mass - std::accumulate(lo.begin(), lo.end(), 0.0);
  const double volume = InclusionExclusion(std::move(widths), lo.size() - 1).sum(residual);
  return std::clamp(volume, 0.0, int_pow(mass, lo.size() - 1));
}

}  // namespace detail

double freedom(const IntervalAssignment& a, const FreedomOptions& options) {
  if (a.size() < 2) throw Error(ErrorKind::TooFewOptions, "freedom needs at least 2 options");
  check_cap(a.size(), options);
  const double volume = detail::box_simplex_volume(a.ne(), a.po(), a.mass());
  return a.mass() == 1.0 ? volume
                         : std::clamp(volume / int_pow(a.mass(), a.size() - 1), 0.0, 1.0);
}

double freedom_conditional(const IntervalAssignment& a, double q, const FreedomOptions& options) {
  if (!(q > 0.0) || q > 1.0 + kTolerance) {
    throw Error(ErrorKind::DomainError, "q = " + std::to_string(q) + " outside (0,1]");
  }
  if (a.size() < 2) throw Error(ErrorKind::TooFewOptions, "freedom needs at least 2 options");
  check_cap(a.size(), options);
  return detail::box_simplex_volume(a.ne(), a.po(), std::min(q, 1.0));
}

double normed_freedom(const IntervalAssignment& a, const FreedomOptions& options) {
  const double f = freedom(a, options);
  if (a.size() == 2) return f;
  return std::pow(f, 1.0 / static_cast<double>(a.size() - 1));
}

double yager_ambiguity(const IntervalAssignment& a) {
  const auto po = sorted_possibilities(a);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < po.size(); ++i) {
    sum += (po[i] - po[i + 1]) / static_cast<double>(i + 1);
  }
  return std::clamp(1.0 - sum, 0.0, 1.0);
}

double hartley_nonspecificity(const IntervalAssignment& a) {
  const auto po = sorted_possibilities(a);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < po.size(); ++i) {
    sum += (po[i] - po[i + 1]) * std::log2(static_cast<double>(i + 1));
  }
  return sum;
}

MeasureReport measure_report(const IntervalAssignment& a, const FreedomOptions& options) {
  const double f = freedom(a, options);
  return MeasureReport{
      .freedom = f,
      .yager_ambiguity = yager_ambiguity(a),
      .hartley_nonspecificity = hartley_nonspecificity(a),
      .normed_freedom = a.size() == 2 ? f : std::pow(f, 1.0 / static_cast<double>(a.size() - 1)),
      .m = a.size(),
  };
}

SubsetScan subset_scan(const IntervalAssignment& a, const FreedomOptions& options) {
  const std::size_t m = a.size();
  if (m < 3) throw Error(ErrorKind::TooFewOptions, "subset scan needs at least 3 options");
  check_cap(m, options);
  const IntervalAssignment t = tighten(a);

  std::vector<bool> pinned(m);
  for (std::size_t i = 0; i < m; ++i) pinned[i] = t.width(i) <= kTolerance;

  SubsetScan scan;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> kept;
    double complement_mass = 0.0;
    bool complement_pinned = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) {
        kept.push_back(i);
      } else {
        complement_pinned = complement_pinned && pinned[i];
        complement_mass += t.ne(i);
      }
    }
    if (!complement_pinned) {
      ++scan.omitted;
      continue;
    }
    const double q = std::max(0.0, 1.0 - complement_mass);
    std::vector<double> ne, po;
    for (std::size_t i : kept) {
      ne.push_back(t.ne(i));
      po.push_back(t.po(i));
    }
    const double value = q > 0.0 ? detail::box_simplex_volume(ne, po, q) : 0.0;
    scan.entries.push_back({std::move(kept), q, value});
  }
  return scan;
}

}  // namespace freedom
