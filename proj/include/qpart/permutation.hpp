#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qpart/measures.hpp"
#include "qpart/partition.hpp"
#include "qpart/rational.hpp"

namespace qpart {

/// Default largest n for which S_n is enumerated exactly (9! = 362880).
inline constexpr int kDefaultEnumerationCap = 9;

/// Thrown when an exact enumeration would exceed its configured cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}
  static Permutation identity(int n);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// Span overloads are the hot path for enumeration; they assume a valid word.
long maj(std::span<const int> word);
std::vector<int> inverse_word(std::span<const int> word);
/// Shape of the row-insertion (Schensted) tableau.
Partition rsk_shape(std::span<const int> word);
/// Longest strictly increasing subsequence, O(n^2) dynamic program.
int lis(std::span<const int> word);
/// Longest strictly decreasing subsequence, O(n^2) dynamic program.
int lds(std::span<const int> word);

/// Sum of descent positions i (1-based) with pi(i) > pi(i+1).
inline long maj(const Permutation& p) { return maj(std::span<const int>(p.word())); }
Permutation inverse(const Permutation& p);
inline Partition rsk_shape(const Permutation& p) { return rsk_shape(std::span<const int>(p.word())); }
inline int lis(const Permutation& p) { return lis(std::span<const int>(p.word())); }
inline int lds(const Permutation& p) { return lds(std::span<const int>(p.word())); }

/// maj(pi) + maj(pi^{-1}), the exponent of q in the biased weight.
long biased_exponent(std::span<const int> word);

/// pi -> q^{maj(pi) + maj(pi^{-1})} / normalizer over S_n.
std::map<Permutation, Rational> biased_pmf(int n, const Rational& q,
                                           int cap = kDefaultEnumerationCap);

/// Law of conjugate(rsk_shape(pi)) under biased_pmf, tallied exactly.
Pmf shape_pushforward(int n, const Rational& q, int cap = kDefaultEnumerationCap);

/// Probability under biased_pmf that lds(pi) < r.
Rational lds_tail(int n, const Rational& q, int r, int cap = kDefaultEnumerationCap);

/// Exact Metropolis ratio pi(y)/pi(x) = q^delta for a move changing the
/// exponent by delta.
Rational metropolis_ratio(const Rational& q, long delta);

/// Metropolis chain on S_n targeting biased_pmf: propose a uniformly random
/// transposition of two positions, accept with min(1, q^delta).
class McmcSampler {
 public:
  /// Starts from the identity. n >= 2, q > 0.
  McmcSampler(int n, const Rational& q, std::uint64_t seed);

  const Permutation& state() const { return state_; }
  long exponent() const { return exponent_; }
  const Permutation& step();
  std::uint64_t accepted() const { return accepted_; }

 private:
  Permutation state_;
  long exponent_ = 0;
  double q_ = 1.0;
  std::mt19937_64 rng_;
  std::uint64_t accepted_ = 0;
};

/// `steps` successive states of a fresh McmcSampler.
std::vector<Permutation> mcmc_sampler(int n, const Rational& q, long steps, std::uint64_t seed);

}  // namespace qpart
