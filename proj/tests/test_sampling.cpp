#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qpart/measures.hpp"
#include "qpart/qarith.hpp"
#include "qpart/sampling.hpp"

using qpart::DyadicInverter;
using qpart::Partition;
using qpart::Rational;

namespace {

// Mass of bit strings of length `bits` that resolve to each cell; prefixes
// that stay ambiguous are reported separately.
std::pair<std::vector<Rational>, Rational> prefix_masses(const DyadicInverter& inv, unsigned bits) {
  std::vector<Rational> mass(inv.cells());
  Rational unresolved;
  const Rational w = qpart::pow(Rational(2), -static_cast<long>(bits));
  for (unsigned long a = 0; a < (1UL << bits); ++a) {
    const auto cell = inv.resolve(mpz_class(a), bits);
    if (cell) mass[*cell] += w; else unresolved += w;
  }
  return {mass, unresolved};
}

}  // namespace

TEST_CASE("dyadic inversion is exact on dyadic pmfs") {
  const DyadicInverter inv({Rational(3, 4), Rational(1, 4)});
  const auto [mass, open] = prefix_masses(inv, 10);
  CHECK(mass[0] == Rational(3, 4));
  CHECK(mass[1] == Rational(1, 4));
  CHECK(open == Rational(0));
}

TEST_CASE("dyadic inversion brackets non-dyadic pmfs") {
  // every cell's resolved mass is <= p and resolved + unresolved >= p
  const std::vector<Rational> probs{Rational(64, 101), Rational(36, 101), Rational(1, 101)};
  const DyadicInverter inv(probs);
  Rational prev_open(1);
  for (unsigned bits = 1; bits <= 10; ++bits) {
    const auto [mass, open] = prefix_masses(inv, bits);
    for (std::size_t i = 0; i < probs.size(); ++i) {
      CHECK(mass[i] <= probs[i]);
      CHECK(probs[i] <= mass[i] + open);
    }
    CHECK(open <= prev_open);
    prev_open = open;
  }
  // at most one CDF boundary per interior cut can be straddled
  CHECK(prev_open <= Rational(2, 1024));
  CHECK_THROWS(DyadicInverter({Rational(1, 2), Rational(1, 3)}));
}

TEST_CASE("point mass and reproducibility") {
  const auto batch = qpart::sample_exact(qpart::p_pmf(1, Rational(2)), 1, 50);
  CHECK(batch.draws.size() == 50);
  for (const auto& l : batch.draws) CHECK(l == Partition{1});
  const auto a = qpart::sample_exact(qpart::q_pmf(5, Rational(2)), 99, 300);
  const auto b = qpart::sample_exact(qpart::q_pmf(5, Rational(2)), 99, 300);
  CHECK(a.draws == b.draws);
  CHECK_THROWS(qpart::sample_exact(qpart::p_pmf(2, Rational(2)), 1, 0));
}

TEST_CASE("frequencies of exact samples") {
  const long N = 10000;
  const auto batch = qpart::sample_exact(qpart::p_pmf(2, Rational(2)), 17, N);
  long rows = 0;
  for (const auto& l : batch.draws) rows += (l == Partition{2});
  const double p = 0.75;
  CHECK(std::abs(rows / static_cast<double>(N) - p) < 4 * std::sqrt(p * (1 - p) / N));

  const auto q3 = qpart::sample_exact(qpart::q_pmf(3, Rational(2)), 18, N);
  long cols = 0;
  for (const auto& l : q3.draws) cols += (l == Partition{1, 1, 1});
  const double pc = 1.0 / 101;
  CHECK(std::abs(cols / static_cast<double>(N) - pc) < 4 * std::sqrt(pc * (1 - pc) / N));
}

TEST_CASE("frequency report") {
  const auto single = qpart::sample_exact(qpart::p_pmf(1, Rational(2)), 5, 1);
  const auto rows = qpart::frequency_report(single);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].frequency == Rational(1));
  const auto batch = qpart::sample_exact(qpart::p_pmf(3, Rational(2)), 1, 10000);
  const auto report = qpart::frequency_report(batch);
  CHECK(report.size() == 3);
  for (const auto& r : report) CHECK(std::abs(r.z_score) < 4);
  const auto chi = qpart::chi_square(batch);
  CHECK(chi.passes());
}

TEST_CASE("tilde samplers") {
  const auto big = qpart::sample_tilde_p(qpart::pow(Rational(2), 20), 3, 2000);
  long empty = 0;
  for (const auto& l : big.draws) empty += l.empty();
  CHECK(empty >= 1990);
  CHECK_FALSE(big.n.has_value());

  const auto batch = qpart::sample_tilde_p(Rational(2), 4, 4000);
  long ones = 0;
  std::map<Partition, long, std::greater<>> size3;
  for (const auto& l : batch.draws) {
    ones += (l.size() == 1);
    if (l.size() == 3) ++size3[l];
  }
  const double p1 = 0.288788;
  CHECK(std::abs(ones / 4000.0 - p1) < 4 * std::sqrt(p1 * (1 - p1) / 4000));
  // conditional on the size, draws follow P_{3,2}
  long total3 = 0;
  for (const auto& [l, c] : size3) total3 += c;
  REQUIRE(total3 > 50);
  const double f = size3[Partition{3}] / static_cast<double>(total3);
  CHECK(std::abs(f - 21.0 / 32) < 4 * std::sqrt((21.0 / 32) * (11.0 / 32) / total3));
  for (const auto& [l, iv] : batch.reference) CHECK(iv.lo() <= iv.hi());

  const auto qb = qpart::sample_tilde_q(Rational(3), 6, 2000);
  CHECK(qb.draws.size() == 2000);
  CHECK(qpart::chi_square(qb).passes());
  CHECK(qpart::sample_tilde_q(Rational(3), 6, 2000).draws == qb.draws);
}
