#include "freedom/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "freedom/error.hpp"

namespace freedom {

namespace {

void check_index(const IntervalAssignment& a, std::size_t k) {
  if (k >= a.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(k + 1) + " outside 1.." +
                                                std::to_string(a.size()));
  }
}

IntervalAssignment with_bounds(const IntervalAssignment& a, std::size_t k, double ne, double po) {
  std::vector<double> lo(a.ne().begin(), a.ne().end());
  std::vector<double> hi(a.po().begin(), a.po().end());
  lo[k] = ne;
  hi[k] = po;
  try {
    return validate(lo, hi, {a.labels().begin(), a.labels().end()}, {.mass = a.mass()});
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidPerturbation, std::string("perturbed assignment: ") + e.what());
  }
}

Verdict judge(double loss_po, double loss_ne) {
  if (std::abs(loss_po - loss_ne) <= kTieBand) return Verdict::tie;
  return loss_po > loss_ne ? Verdict::po_dominates : Verdict::ne_dominates;
}

SensitivityReport compare(const IntervalAssignment& a, std::size_t k, double delta,
                          const IntervalAssignment& cut_po, const IntervalAssignment& cut_ne,
                          const FreedomOptions& options) {
  const double base = freedom(a, options);
  const double loss_po = base - freedom(cut_po, options);
  const double loss_ne = base - freedom(cut_ne, options);
  return SensitivityReport{
      .index = k,
      .delta = delta,
      .loss_from_po = loss_po,
      .loss_from_ne = loss_ne,
      .condition_holds = dominance_condition(a, k),
      .balance_holds = balance_condition(a),
      .verdict = judge(loss_po, loss_ne),
  };
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::po_dominates: return "po_dominates";
    case Verdict::ne_dominates: return "ne_dominates";
    case Verdict::tie: return "tie";
  }
  return "tie";
}

bool dominance_condition(const IntervalAssignment& a, std::size_t k) {
  check_index(a, k);
  double others_ne = 0.0;
  double others_po = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == k) continue;
    others_ne += a.ne(i);
    others_po += a.po(i);
  }
  return others_ne < 1.0 - others_po;
}

bool balance_condition(const IntervalAssignment& a) {
  const double sum_ne = std::accumulate(a.ne().begin(), a.ne().end(), 0.0);
  const double sum_po = std::accumulate(a.po().begin(), a.po().end(), 0.0);
  return sum_ne + sum_po < 2.0;
}

SensitivityReport impact_compare(const IntervalAssignment& a, std::size_t k, double delta,
                                 const FreedomOptions& options) {
  check_index(a, k);
  if (!(delta >= 0.0)) throw Error(ErrorKind::InvalidPerturbation, "delta must be nonnegative");
  if (delta > a.width(k) + kTolerance) {
    throw Error(ErrorKind::InvalidPerturbation,
                "delta " + std::to_string(delta) + " exceeds the bound width of option " +
                    std::to_string(k + 1));
  }
  const auto cut_po = with_bounds(a, k, a.ne(k), std::max(a.ne(k), a.po(k) - delta));
  const auto cut_ne = with_bounds(a, k, std::min(a.po(k), a.ne(k) + delta), a.po(k));
  return compare(a, k, delta, cut_po, cut_ne, options);
}

SensitivityReport imposition_compare(const IntervalAssignment& a, std::size_t k, double eps,
                                     const FreedomOptions& options) {
  check_index(a, k);
  if (a.ne(k) > kTolerance || a.po(k) < 1.0 - kTolerance) {
    throw Error(ErrorKind::NotVacuous, "option " + std::to_string(k + 1) +
                                           " already has bounds; imposition needs ne = 0, po = 1");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorKind::DomainError, "eps = " + std::to_string(eps) + " outside (0,1)");
  }
  const auto cut_po = with_bounds(a, k, 0.0, 1.0 - eps);
  const auto cut_ne = with_bounds(a, k, eps, 1.0);
  return compare(a, k, eps, cut_po, cut_ne, options);
}

}  // namespace freedom
