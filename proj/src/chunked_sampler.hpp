#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "freedom/error.hpp"
#include "freedom/oracle.hpp"

namespace freedom::detail {

inline std::vector<Xoshiro256> chunk_streams(std::uint64_t seed, std::uint64_t chunks) {
  std::vector<Xoshiro256> streams;
  streams.reserve(chunks);
  Xoshiro256 rng(seed);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    streams.push_back(rng);
    rng.jump();
  }
  return streams;
}

/// Counts simplex samples (dimension `options`, total `mass`) for which
/// accept(std::span<const double>) holds.
template <class Accept>
std::uint64_t count_accepted(std::size_t options, double mass, std::uint64_t samples,
                             std::uint64_t seed, Execution execution, const Accept& accept) {
  if (samples == 0) throw Error(ErrorKind::DomainError, "sample count must be positive");
  const std::uint64_t chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  const auto streams = chunk_streams(seed, chunks);

  auto run_chunk = [&](std::uint64_t c) {
    Xoshiro256 rng = streams[c];
    std::vector<double> p(options);
    const std::uint64_t n = std::min(kSamplesPerChunk, samples - c * kSamplesPerChunk);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      sample_simplex(rng, p, mass);
      if (accept(std::span<const double>(p))) ++hits;
    }
    return hits;
  };

  std::uint64_t total = 0;
  const auto count = static_cast<std::int64_t>(chunks);
  if (execution == Execution::parallel) {
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 1)
    for (std::int64_t c = 0; c < count; ++c) total += run_chunk(static_cast<std::uint64_t>(c));
  } else {
    for (std::int64_t c = 0; c < count; ++c) total += run_chunk(static_cast<std::uint64_t>(c));
  }
  return total;
}

MCEstimate make_estimate(std::uint64_t accepted, std::uint64_t samples, std::uint64_t seed,
                         double scale = 1.0);

}  // namespace freedom::detail
