#pragma once

// Data-parallel kernels behind the measures and permutation statistics.
//
// Every kernel exists twice: qpart::par (OpenMP) and qpart::serial (plain
// loops). The serial versions are the reference; tests require exact equality
// and bench/ compares their timings. Exact rational addition is associative,
// so any reduction order gives bit-identical results.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "qpart/rational.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qpart {

/// Integer tallies of a permutation statistic, split by the exponent of q
/// carried by each permutation: counts[key][e] = #{pi : key(pi) = key, e(pi) = e}.
template <class Key>
using ExponentTally = std::map<Key, std::vector<std::int64_t>>;

template <class Key>
void merge_tally(ExponentTally<Key>& into, const ExponentTally<Key>& from) {
  for (const auto& [key, counts] : from) {
    auto& dst = into[key];
    if (dst.size() < counts.size()) dst.resize(counts.size(), 0);
    for (std::size_t e = 0; e < counts.size(); ++e) dst[e] += counts[e];
  }
}

namespace detail {

/// Visits all permutations of {1..n} whose first entry is `first`, in
/// lexicographic order.
template <class Visit>
void for_each_permutation_with_first(int n, int first, Visit&& visit) {
  std::vector<int> word(static_cast<std::size_t>(n));
  word[0] = first;
  int v = 1;
  for (std::size_t i = 1; i < word.size(); ++i, ++v) {
    if (v == first) ++v;
    word[i] = v;
  }
  do {
    visit(std::span<const int>(word));
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

template <class Key, class Stat>
void tally_into(ExponentTally<Key>& tally, std::span<const int> word, Stat& stat) {
  const auto [key, e] = stat(word);
  auto& counts = tally[key];
  if (counts.size() <= static_cast<std::size_t>(e)) counts.resize(static_cast<std::size_t>(e) + 1, 0);
  ++counts[static_cast<std::size_t>(e)];
}

}  // namespace detail

namespace serial {

/// out[i] = weight(items[i]).
template <class T, class Weight>
std::vector<Rational> tabulate(std::span<const T> items, Weight&& weight) {
  std::vector<Rational> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) out[i] = weight(items[i]);
  return out;
}

template <class T, class Weight>
Rational sum(std::span<const T> items, Weight&& weight) {
  Rational total;
  for (const auto& item : items) total += weight(item);
  return total;
}

/// Tallies stat(word) = {key, exponent} over all of S_n (n >= 1).
template <class Key, class Stat>
ExponentTally<Key> tally_permutations(int n, Stat&& stat) {
  ExponentTally<Key> tally;
  for (int first = 1; first <= n; ++first) {
    detail::for_each_permutation_with_first(
        n, first, [&](std::span<const int> w) { detail::tally_into(tally, w, stat); });
  }
  return tally;
}

}  // namespace serial

namespace par {

template <class T, class Weight>
std::vector<Rational> tabulate(std::span<const T> items, Weight&& weight) {
  std::vector<Rational> out(items.size());
  const auto count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = weight(items[static_cast<std::size_t>(i)]);
  }
  return out;
}

template <class T, class Weight>
Rational sum(std::span<const T> items, Weight&& weight) {
  const auto terms = tabulate(items, weight);
  return std::accumulate(terms.begin(), terms.end(), Rational());
}

template <class Key, class Stat>
ExponentTally<Key> tally_permutations(int n, Stat&& stat) {
  std::vector<ExponentTally<Key>> shards(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    auto& shard = shards[static_cast<std::size_t>(first - 1)];
    detail::for_each_permutation_with_first(
        n, first, [&](std::span<const int> w) { detail::tally_into(shard, w, stat); });
  }
  ExponentTally<Key> tally;
  for (const auto& shard : shards) merge_tally(tally, shard);
  return tally;
}

}  // namespace par

/// Number of OpenMP threads the par kernels will use (1 without OpenMP).
inline int kernel_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qpart
