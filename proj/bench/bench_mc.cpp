// Serial vs OpenMP Monte-Carlo kernels. Both modes produce identical
// estimates, so only wall time differs.

#include <benchmark/benchmark.h>

#include "freedom/crosstab.hpp"
#include "freedom/measures.hpp"
#include "freedom/oracle.hpp"

namespace {

using freedom::Execution;

freedom::IntervalAssignment six_options() {
  return freedom::validate({0.05, 0.0, 0.1, 0.0, 0.05, 0.0}, {0.4, 0.5, 0.45, 0.3, 0.6, 0.35});
}

void BM_McFreedom(benchmark::State& state, Execution execution) {
  const auto a = six_options();
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(freedom::mc_freedom(a, samples, 42, execution));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_McJointFreedom(benchmark::State& state, Execution execution) {
  const freedom::CrossTable t(freedom::validate({0.2, 0.1, 0.0}, {0.6, 0.5, 0.5}),
                              freedom::validate({0.3, 0.0, 0.1}, {0.7, 0.4, 0.5}));
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(freedom::mc_joint_freedom(t, samples, 42, execution));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClosedForm(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<double> ne(m, 0.0), po(m, 2.5 / static_cast<double>(m));
  const auto a = freedom::validate(ne, po);
  for (auto _ : state) benchmark::DoNotOptimize(freedom::freedom(a));
}

}  // namespace

BENCHMARK_CAPTURE(BM_McFreedom, serial, Execution::serial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_McFreedom, parallel, Execution::parallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_McJointFreedom, serial, Execution::serial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_McJointFreedom, parallel, Execution::parallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedForm)->DenseRange(4, 20, 4);

BENCHMARK_MAIN();
