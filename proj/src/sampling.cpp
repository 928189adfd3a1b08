#include "qpart/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "qpart/qarith.hpp"

namespace qpart {

int BitSource::next_bit() {
  if (remaining_ == 0) {
    buffer_ = rng_();
    remaining_ = 64;
  }
  const int bit = static_cast<int>(buffer_ & 1U);
  buffer_ >>= 1U;
  --remaining_;
  return bit;
}

DyadicInverter::DyadicInverter(const std::vector<Rational>& probs) {
  if (probs.empty()) throw std::invalid_argument("DyadicInverter needs at least one cell");
  Rational acc;
  cdf_.reserve(probs.size());
  for (const auto& p : probs) {
    if (p.sign() < 0) throw std::invalid_argument("negative probability");
    acc += p;
    cdf_.push_back(acc);
  }
  if (acc != Rational(1)) throw std::invalid_argument("probabilities must sum to exactly 1");
}

std::optional<std::size_t> DyadicInverter::resolve(const mpz_class& prefix, unsigned bits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  const Rational lo(prefix, scale);
  const Rational hi(mpz_class(prefix + 1), scale);
  // First cell whose upper boundary exceeds lo.
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), lo);
  if (it == cdf_.end()) return std::nullopt;
  if (hi <= *it) return static_cast<std::size_t>(it - cdf_.begin());
  return std::nullopt;
}

std::size_t DyadicInverter::sample(BitSource& bits) const {
  mpz_class prefix = 0;
  for (unsigned k = 1;; ++k) {
    prefix = 2 * prefix + bits.next_bit();
    if (const auto cell = resolve(prefix, k)) return *cell;
  }
}

namespace {

constexpr int kMaxTildeSize = 400;

SampleBatch::Reference exact_reference(const Pmf& pmf) {
  SampleBatch::Reference ref;
  for (const auto& [lambda, p] : pmf.entries) ref.emplace(lambda, Interval(p));
  return ref;
}

/// Samples the size of a tilde measure: Prob(|lambda| = n) = C * w(n), with C
/// enclosed by prefactor(M).
class SizeSampler {
 public:
  SizeSampler(std::function<Interval(long)> prefactor, std::function<Rational(int)> weight, long truncation)
      : prefactor_(std::move(prefactor)), weight_(std::move(weight)), truncation_(truncation) {}

  int sample(BitSource& bits) {
    mpz_class prefix = 0;
    mpz_class scale = 1;
    Interval pref = current_prefactor();
    for (;;) {
      prefix = 2 * prefix + bits.next_bit();
      scale *= 2;
      const Rational x_lo(prefix, scale);
      const Rational x_hi(mpz_class(prefix + 1), scale);
      if (const auto n = locate(pref, x_lo, x_hi)) return *n;
      // When the dyadic cell is narrower than the prefactor uncertainty,
      // extra bits alone cannot separate it; tighten the enclosure.
      if (Rational(mpz_class(1), scale) < pref.width()) {
        truncation_ *= 2;
        pref = current_prefactor();
      }
    }
  }

  long truncation() const { return truncation_; }

 private:
  Interval current_prefactor() { return prefactor_(truncation_); }

  const Rational& cumulative(int n) {
    while (static_cast<int>(partial_.size()) <= n) {
      const int m = static_cast<int>(partial_.size());
      partial_.push_back((m == 0 ? Rational() : partial_.back()) + weight_(m));
    }
    return partial_[static_cast<std::size_t>(n)];
  }

  std::optional<int> locate(const Interval& pref, const Rational& x_lo, const Rational& x_hi) {
    Rational prev_hi;  // upper enclosure of the CDF before cell n
    for (int n = 0; n <= kMaxTildeSize; ++n) {
      const Rational& s = cumulative(n);
      const Rational f_lo = pref.lo() * s;
      const Rational f_hi = pref.hi() * s;
      if (prev_hi <= x_lo && x_hi <= f_lo) return n;
      if (x_lo < f_hi) return std::nullopt;  // straddles an uncertain boundary
      prev_hi = f_hi;
    }
    return std::nullopt;
  }

  std::function<Interval(long)> prefactor_;
  std::function<Rational(int)> weight_;
  long truncation_;
  std::vector<Rational> partial_;
};

SampleBatch sample_tilde(const std::string& tag, MeasureKind kind, const Rational& q, std::uint64_t seed,
                         long count, long truncation) {
  if (q < Rational(2)) throw std::domain_error("tilde samplers require q >= 2");
  if (count < 1) throw std::domain_error("sample count must be positive");
  if (truncation < 1) throw std::domain_error("truncation must be positive");

  std::function<Interval(long)> prefactor;
  std::function<Rational(int)> weight;
  if (kind == MeasureKind::P) {
    prefactor = [q](long m) { return sp_prod_interval(q, m); };
    weight = [q](int n) { return euler_coeff(n, q); };
  } else {
    prefactor = [q](long m) { return dp_prod_interval(q, m); };
    auto z = std::make_shared<ZTable>(z_table(0, q));
    weight = [q, z](int n) {
      if (static_cast<int>(z->values.size()) <= n) *z = z_table(std::max(n, 2 * static_cast<int>(z->values.size())), q);
      return z->values[static_cast<std::size_t>(n)];
    };
  }
  SizeSampler sizes(prefactor, weight, truncation);

  struct Conditional {
    std::vector<Partition> parts;
    DyadicInverter inverter;
  };
  std::map<int, Conditional> conditionals;
  BitSource bits(seed);

  SampleBatch batch;
  batch.measure = tag;
  batch.q = q;
  batch.seed = seed;
  batch.draws.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const int n = sizes.sample(bits);
    auto it = conditionals.find(n);
    if (it == conditionals.end()) {
      const Pmf pmf = kind == MeasureKind::P ? p_pmf(n, q) : q_pmf(n, q);
      std::vector<Partition> parts;
      std::vector<Rational> probs;
      for (const auto& [lambda, p] : pmf.entries) {
        parts.push_back(lambda);
        probs.push_back(p);
      }
      it = conditionals.emplace(n, Conditional{std::move(parts), DyadicInverter(probs)}).first;
    }
    batch.draws.push_back(it->second.parts[it->second.inverter.sample(bits)]);
  }
  for (const auto& lambda : batch.draws) {
    if (batch.reference.count(lambda) != 0) continue;
    batch.reference.emplace(lambda, kind == MeasureKind::P ? tilde_p_pmf(lambda, q, sizes.truncation())
                                                           : tilde_q_pmf(lambda, q, sizes.truncation()));
  }
  return batch;
}

}  // namespace

SampleBatch sample_exact(const Pmf& pmf, std::uint64_t seed, long count) {
  if (count < 1) throw std::domain_error("sample count must be positive");
  std::vector<Partition> parts;
  std::vector<Rational> probs;
  for (const auto& [lambda, p] : pmf.entries) {
    parts.push_back(lambda);
    probs.push_back(p);
  }
  const DyadicInverter inverter(probs);
  BitSource bits(seed);
  SampleBatch batch;
  batch.measure = to_string(pmf.measure);
  batch.n = pmf.n;
  batch.q = pmf.q;
  batch.seed = seed;
  batch.reference = exact_reference(pmf);
  batch.draws.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) batch.draws.push_back(parts[inverter.sample(bits)]);
  return batch;
}

SampleBatch sample_tilde_p(const Rational& q, std::uint64_t seed, long count, long truncation) {
  return sample_tilde("tildeP", MeasureKind::P, q, seed, count, truncation);
}

SampleBatch sample_tilde_q(const Rational& q, std::uint64_t seed, long count, long truncation) {
  return sample_tilde("tildeQ", MeasureKind::Q, q, seed, count, truncation);
}

std::vector<FrequencyRow> frequency_report(const SampleBatch& batch) {
  std::map<Partition, long, std::greater<>> counts;
  for (const auto& [lambda, iv] : batch.reference) counts[lambda] = 0;
  for (const auto& lambda : batch.draws) ++counts[lambda];
  const auto total = static_cast<long>(batch.draws.size());
  std::vector<FrequencyRow> rows;
  for (const auto& [lambda, c] : counts) {
    FrequencyRow row;
    row.partition = lambda;
    row.count = c;
    row.frequency = Rational(c, total);
    const auto ref = batch.reference.find(lambda);
    row.exact = ref == batch.reference.end() ? Interval(Rational(0)) : ref->second;
    const double p = row.exact.midpoint().to_double();
    const double f = row.frequency.to_double();
    const double var = p * (1.0 - p) / static_cast<double>(total);
    if (var > 0.0) {
      row.z_score = (f - p) / std::sqrt(var);
    } else {
      row.z_score = (f == p) ? 0.0 : std::numeric_limits<double>::infinity();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ChiSquare chi_square(const SampleBatch& batch) {
  const auto rows = frequency_report(batch);
  const auto total = static_cast<double>(batch.draws.size());
  std::vector<std::pair<double, double>> cells;  // (observed, expected)
  std::pair<double, double> pooled{0.0, 0.0};
  for (const auto& row : rows) {
    const double expected = row.exact.midpoint().to_double() * total;
    const auto observed = static_cast<double>(row.count);
    if (expected < 5.0) {
      pooled.first += observed;
      pooled.second += expected;
    } else {
      cells.emplace_back(observed, expected);
    }
  }
  if (pooled.second > 0.0) {
    if (pooled.second < 5.0 && !cells.empty()) {
      auto smallest = std::min_element(cells.begin(), cells.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
      smallest->first += pooled.first;
      smallest->second += pooled.second;
    } else {
      cells.push_back(pooled);
    }
  }
  ChiSquare out;
  for (const auto& [o, e] : cells) out.statistic += (o - e) * (o - e) / e;
  out.degrees_of_freedom = std::max(1, static_cast<int>(cells.size()) - 1);
  const boost::math::chi_squared dist(out.degrees_of_freedom);
  out.quantile_999 = boost::math::quantile(dist, 0.999);
  return out;
}

}  // namespace qpart
