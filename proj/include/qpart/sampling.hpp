#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qpart/interval.hpp"
#include "qpart/measures.hpp"
#include "qpart/partition.hpp"
#include "qpart/rational.hpp"

namespace qpart {

/// Seeded stream of fair bits (mt19937_64 output, consumed low bit first).
class BitSource {
 public:
  explicit BitSource(std::uint64_t seed) : rng_(seed) {}
  int next_bit();

 private:
  std::mt19937_64 rng_;
  std::uint64_t buffer_ = 0;
  int remaining_ = 0;
};

/// Inverse-CDF sampling by dyadic refinement: random bits are read until the
/// dyadic interval [a/2^k, (a+1)/2^k) lies inside a single CDF cell, so the
/// output law is exactly the given probability vector.
class DyadicInverter {
 public:
  /// `probs` must be nonnegative and sum to exactly 1.
  explicit DyadicInverter(const std::vector<Rational>& probs);

  std::size_t cells() const { return cdf_.size(); }
  /// Index of the cell containing [a/2^k, (a+1)/2^k), if it is a single one.
  std::optional<std::size_t> resolve(const mpz_class& prefix, unsigned bits) const;
  std::size_t sample(BitSource& bits) const;

 private:
  std::vector<Rational> cdf_;  ///< cdf_[i] = p_0 + ... + p_i
};

struct SampleBatch {
  using Reference = std::map<Partition, Interval, std::greater<>>;

  std::string measure;    ///< "P", "Q", "tildeP" or "tildeQ"
  std::optional<int> n;   ///< fixed size, empty for the tilde measures
  Rational q;
  std::uint64_t seed = 0;
  std::vector<Partition> draws;
  /// Exact probabilities (degenerate intervals) or certified enclosures for
  /// the tilde measures; covers every drawn partition.
  Reference reference;
};

/// i.i.d. draws from `pmf` by dyadic inversion. count >= 1.
SampleBatch sample_exact(const Pmf& pmf, std::uint64_t seed, long count);

/// Draws from tilde P_q: the size n by interval-certified inversion of
/// tildeP(|lambda| = n) (doubling the truncation until the dyadic point
/// separates from every uncertain CDF boundary), then lambda ~ P_{n,q}.
SampleBatch sample_tilde_p(const Rational& q, std::uint64_t seed, long count, long truncation = 30);
/// Same scheme for tilde Q_q with size weights z(n, q).
SampleBatch sample_tilde_q(const Rational& q, std::uint64_t seed, long count, long truncation = 30);

struct FrequencyRow {
  Partition partition;
  long count = 0;
  Rational frequency;
  Interval exact;
  double z_score = 0.0;  ///< (frequency - p) / sqrt(p (1 - p) / N) at the interval midpoint
};

/// One row per partition in the reference or in the draws, canonical order.
std::vector<FrequencyRow> frequency_report(const SampleBatch& batch);

struct ChiSquare {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double quantile_999 = 0.0;
  bool passes() const { return statistic < quantile_999; }
};

/// Pearson statistic against the reference midpoints; cells with expected
/// count below 5 are pooled into one cell.
ChiSquare chi_square(const SampleBatch& batch);

}  // namespace qpart
