#include "qpart/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "qpart/kernels.hpp"

namespace qpart {

namespace {

void require_within_cap(int n, int cap) {
  if (n < 1) throw std::domain_error("permutation enumeration needs n >= 1");
  if (n > cap) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(cap) + "; use the MCMC sampler");
  }
}

// Draws built from raw engine output; the <random> distributions are
// implementation-defined.
int uniform_below(std::mt19937_64& rng, int bound) {
  const auto b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<int>(x % b);
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Evaluates sum_e counts[e] q^e.
Rational evaluate_tally(const std::vector<std::int64_t>& counts, const Rational& q) {
  Rational total;
  Rational power(1);
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] != 0) total += Rational(static_cast<long>(counts[e])) * power;
    power *= q;
  }
  return total;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(word_[i]);
  }
  return out + "]";
}

long maj(std::span<const int> word) {
  long total = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) total += static_cast<long>(i + 1);
  }
  return total;
}

std::vector<int> inverse_word(std::span<const int> word) {
  std::vector<int> inv(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) inv[static_cast<std::size_t>(word[i] - 1)] = static_cast<int>(i + 1);
  return inv;
}

Permutation inverse(const Permutation& p) { return Permutation(inverse_word(p.word())); }

long biased_exponent(std::span<const int> word) {
  const auto inv = inverse_word(word);
  return maj(word) + maj(std::span<const int>(inv));
}

Partition rsk_shape(std::span<const int> word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    int bumped = x;
    std::size_t r = 0;
    for (; r < rows.size(); ++r) {
      auto& row = rows[r];
      const auto it = std::upper_bound(row.begin(), row.end(), bumped);
      if (it == row.end()) {
        row.push_back(bumped);
        break;
      }
      std::swap(*it, bumped);
    }
    if (r == rows.size()) rows.push_back({bumped});
  }
  std::vector<int> shape;
  shape.reserve(rows.size());
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return Partition(std::move(shape));
}

int lis(std::span<const int> word) {
  std::vector<int> best(word.size(), 1);
  int out = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (word[j] < word[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

int lds(std::span<const int> word) {
  std::vector<int> best(word.size(), 1);
  int out = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (word[j] > word[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

std::map<Permutation, Rational> biased_pmf(int n, const Rational& q, int cap) {
  require_within_cap(n, cap);
  if (q.sign() <= 0) throw std::domain_error("biased_pmf requires q > 0");
  std::map<Permutation, Rational> out;
  std::vector<int> word = Permutation::identity(n).word();
  Rational total;
  do {
    Rational w = pow(q, biased_exponent(word));
    total += w;
    out.emplace_hint(out.end(), Permutation(word), std::move(w));
  } while (std::next_permutation(word.begin(), word.end()));
  for (auto& [perm, p] : out) p /= total;
  return out;
}

Pmf shape_pushforward(int n, const Rational& q, int cap) {
  require_within_cap(n, cap);
  if (q.sign() <= 0) throw std::domain_error("shape_pushforward requires q > 0");
  const auto tally = par::tally_permutations<Partition>(n, [](std::span<const int> w) {
    return std::pair{conjugate(rsk_shape(w)), biased_exponent(w)};
  });
  Pmf pmf;
  pmf.n = n;
  pmf.q = q;
  pmf.measure = MeasureKind::Q;
  Rational total;
  for (const auto& [shape, counts] : tally) {
    Rational w = evaluate_tally(counts, q);
    total += w;
    pmf.entries.emplace(shape, std::move(w));
  }
  for (auto& [shape, p] : pmf.entries) p /= total;
  return pmf;
}

Rational lds_tail(int n, const Rational& q, int r, int cap) {
  require_within_cap(n, cap);
  if (q.sign() <= 0) throw std::domain_error("lds_tail requires q > 0");
  const auto tally = par::tally_permutations<int>(n, [](std::span<const int> w) {
    return std::pair{lds(w), biased_exponent(w)};
  });
  Rational selected, total;
  for (const auto& [length, counts] : tally) {
    const Rational w = evaluate_tally(counts, q);
    total += w;
    if (length < r) selected += w;
  }
  return selected / total;
}

Rational metropolis_ratio(const Rational& q, long delta) { return pow(q, delta); }

McmcSampler::McmcSampler(int n, const Rational& q, std::uint64_t seed)
    : state_(Permutation::identity(n)), q_(q.to_double()), rng_(seed) {
  if (n < 2) throw std::domain_error("McmcSampler needs n >= 2");
  if (q.sign() <= 0) throw std::domain_error("McmcSampler requires q > 0");
  exponent_ = biased_exponent(state_.word());
}

const Permutation& McmcSampler::step() {
  const int n = state_.size();
  const int i = uniform_below(rng_, n);
  int j = uniform_below(rng_, n);
  while (j == i) j = uniform_below(rng_, n);
  std::vector<int> proposal = state_.word();
  std::swap(proposal[static_cast<std::size_t>(i)], proposal[static_cast<std::size_t>(j)]);
  const long proposed_exponent = biased_exponent(proposal);
  const long delta = proposed_exponent - exponent_;
  bool accept = true;
  const double ratio = std::pow(q_, static_cast<double>(delta));
  if (ratio < 1.0) {
    accept = uniform_unit(rng_) < ratio;
  }
  if (accept) {
    state_ = Permutation(std::move(proposal));
    exponent_ = proposed_exponent;
    ++accepted_;
  }
  return state_;
}

std::vector<Permutation> mcmc_sampler(int n, const Rational& q, long steps, std::uint64_t seed) {
  if (steps < 1) throw std::domain_error("mcmc_sampler needs steps >= 1");
  McmcSampler sampler(n, q, seed);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (long s = 0; s < steps; ++s) out.push_back(sampler.step());
  return out;
}

}  // namespace qpart
