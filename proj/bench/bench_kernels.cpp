// Serial reference vs OpenMP kernels on the two hot loops: weighting every
// partition of n, and tallying a permutation statistic over S_n.

#include <benchmark/benchmark.h>

#include <span>

#include "qpart/kernels.hpp"
#include "qpart/measures.hpp"
#include "qpart/permutation.hpp"

namespace {

using qpart::Partition;
using qpart::Rational;

template <bool Parallel>
void BM_QWeightSum(benchmark::State& state) {
  const auto parts = qpart::enumerate_partitions(static_cast<int>(state.range(0)));
  const std::span<const Partition> items(parts);
  const Rational q(5, 2);
  auto w = [&](const Partition& l) { return qpart::q_weight(l, q); };
  for (auto _ : state) {
    Rational total = Parallel ? qpart::par::sum(items, w) : qpart::serial::sum(items, w);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
}

template <bool Parallel>
void BM_ShapeTally(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto stat = [](std::span<const int> w) {
    return std::pair{qpart::conjugate(qpart::rsk_shape(w)), qpart::biased_exponent(w)};
  };
  for (auto _ : state) {
    auto tally = Parallel ? qpart::par::tally_permutations<Partition>(n, stat)
                          : qpart::serial::tally_permutations<Partition>(n, stat);
    benchmark::DoNotOptimize(tally);
  }
}

}  // namespace

BENCHMARK(BM_QWeightSum<false>)->Name("q_weight_sum/serial")->Arg(15)->Arg(20)->Arg(25);
BENCHMARK(BM_QWeightSum<true>)->Name("q_weight_sum/omp")->Arg(15)->Arg(20)->Arg(25);
BENCHMARK(BM_ShapeTally<false>)->Name("shape_tally/serial")->Arg(7)->Arg(8);
BENCHMARK(BM_ShapeTally<true>)->Name("shape_tally/omp")->Arg(7)->Arg(8);

BENCHMARK_MAIN();
