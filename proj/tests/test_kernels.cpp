#include <doctest.h>

#include <span>

#include "qpart/kernels.hpp"
#include "qpart/measures.hpp"
#include "qpart/permutation.hpp"

using qpart::Partition;
using qpart::Rational;

TEST_CASE("tabulate and sum: parallel equals serial") {
  const Rational q(5, 2);
  for (int n = 0; n <= 16; ++n) {
    const auto parts = qpart::enumerate_partitions(n);
    const std::span<const Partition> items(parts);
    auto w = [&](const Partition& l) { return qpart::q_weight(l, q); };
    CHECK(qpart::par::tabulate(items, w) == qpart::serial::tabulate(items, w));
    CHECK(qpart::par::sum(items, w) == qpart::serial::sum(items, w));
  }
  CHECK(qpart::par::sum(std::span<const Partition>(), [](const Partition&) { return Rational(1); }) == Rational(0));
}

TEST_CASE("permutation tallies: parallel equals serial") {
  auto stat = [](std::span<const int> w) {
    return std::pair{qpart::conjugate(qpart::rsk_shape(w)), qpart::biased_exponent(w)};
  };
  for (int n = 1; n <= 7; ++n) {
    const auto serial = qpart::serial::tally_permutations<Partition>(n, stat);
    const auto par = qpart::par::tally_permutations<Partition>(n, stat);
    CHECK(serial == par);
    std::int64_t total = 0;
    for (const auto& [key, counts] : par) {
      for (auto c : counts) total += c;
    }
    std::int64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total == fact);
  }
}

TEST_CASE("merge_tally adds counts and extends exponents") {
  qpart::ExponentTally<int> a{{1, {1, 2}}};
  const qpart::ExponentTally<int> b{{1, {0, 1, 5}}, {2, {3}}};
  qpart::merge_tally(a, b);
  CHECK(a.at(1) == std::vector<std::int64_t>{1, 3, 5});
  CHECK(a.at(2) == std::vector<std::int64_t>{3});
  CHECK(qpart::kernel_threads() >= 1);
}
