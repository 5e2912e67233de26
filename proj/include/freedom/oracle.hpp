#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "freedom/assignment.hpp"
#include "freedom/rng.hpp"

namespace freedom {

/// Monte-Carlo kernels are written once and run either under OpenMP or as
/// a plain loop. Both split the samples into fixed-size chunks, each drawn
/// from its own xoshiro substream (the seed's stream jumped once per
/// chunk), and sum integer counts; results are therefore bit-identical
/// across execution modes and thread counts.
enum class Execution { parallel, serial };

inline constexpr std::uint64_t kSamplesPerChunk = 1u << 16;

/// Fewer accepted samples than this flags an estimate as unreliable.
inline constexpr std::uint64_t kMinAccepted = 100;

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  std::uint64_t seed = 0;

  bool low_acceptance() const { return accepted < kMinAccepted; }
  bool operator==(const MCEstimate&) const = default;
};

/// Uniform point on {p >= 0, sum p = mass} by sorted-uniform spacings.
/// out.size() is the number of options.
void sample_simplex(Xoshiro256& rng, std::span<double> out, double mass = 1.0);

/// Fraction of uniform simplex samples inside every [ne_i, po_i].
MCEstimate mc_freedom(const IntervalAssignment& a, std::uint64_t samples, std::uint64_t seed,
                      Execution execution = Execution::parallel);

/// Acceptance fraction over the q-simplex, scaled by q^(K-1) to match
/// freedom_conditional. std_error is scaled the same way.
MCEstimate mc_freedom_conditional(const IntervalAssignment& a, double q, std::uint64_t samples,
                                  std::uint64_t seed, Execution execution = Execution::parallel);

struct RegionPolygon {
  std::vector<std::array<double, 2>> vertices;  // (p1, p2), counter-clockwise
  double area_fraction = 0.0;                   // area / (1/2)
};

/// Feasible region of a three-option assignment drawn in the (p1, p2)
/// triangle, by clipping against the six half-planes of the bounds.
/// Throws WrongDimension unless M = 3.
RegionPolygon region_polygon(const IntervalAssignment& a);

}  // namespace freedom
