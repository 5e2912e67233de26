#include "freedom/oracle.hpp"

#include <cmath>
#include <string>

#include "chunked_sampler.hpp"
#include "freedom/error.hpp"

namespace freedom {

namespace detail {

MCEstimate make_estimate(std::uint64_t accepted, std::uint64_t samples, std::uint64_t seed,
                         double scale) {
  const double fraction = static_cast<double>(accepted) / static_cast<double>(samples);
  return MCEstimate{
      .mean = scale * fraction,
      .std_error = scale * std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(samples)),
      .samples = samples,
      .accepted = accepted,
      .seed = seed,
  };
}

}  // namespace detail

void sample_simplex(Xoshiro256& rng, std::span<double> out, double mass) {
  const std::size_t m = out.size();
  if (m == 0) return;
  const std::size_t cuts = m - 1;
  // Insertion sort of the cut points; m is small.
  for (std::size_t i = 0; i < cuts; ++i) {
    const double u = rng.uniform();
    std::size_t j = i;
    while (j > 0 && out[j - 1] > u) {
      out[j] = out[j - 1];
      --j;
    }
    out[j] = u;
  }
  double upper = 1.0;
  for (std::size_t i = m; i-- > 0;) {
    const double lower = i == 0 ? 0.0 : out[i - 1];
    out[i] = mass * (upper - lower);
    upper = lower;
  }
}

MCEstimate mc_freedom(const IntervalAssignment& a, std::uint64_t samples, std::uint64_t seed,
                      Execution execution) {
  const auto ne = a.ne();
  const auto po = a.po();
  const std::uint64_t hits = detail::count_accepted(
      a.size(), 1.0, samples, seed, execution, [ne, po](std::span<const double> p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (p[i] < ne[i] || p[i] > po[i]) return false;
        }
        return true;
      });
  return detail::make_estimate(hits, samples, seed);
}

MCEstimate mc_freedom_conditional(const IntervalAssignment& a, double q, std::uint64_t samples,
                                  std::uint64_t seed, Execution execution) {
  if (!(q > 0.0) || q > 1.0 + kTolerance) {
    throw Error(ErrorKind::DomainError, "q = " + std::to_string(q) + " outside (0,1]");
  }
  q = std::min(q, 1.0);
  const auto ne = a.ne();
  const auto po = a.po();
  const std::uint64_t hits = detail::count_accepted(
      a.size(), q, samples, seed, execution, [ne, po](std::span<const double> p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (p[i] < ne[i] || p[i] > po[i]) return false;
        }
        return true;
      });
  return detail::make_estimate(hits, samples, seed,
                               std::pow(q, static_cast<double>(a.size() - 1)));
}

}  // namespace freedom
