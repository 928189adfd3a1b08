#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "qpart/measures.hpp"
#include "qpart/permutation.hpp"

using qpart::Partition;
using qpart::Permutation;
using qpart::Rational;

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK(Permutation::identity(3) == Permutation{1, 2, 3});
  CHECK(Permutation{3, 1, 2}.str() == "[3,1,2]");
}

TEST_CASE("major index and inverse") {
  CHECK(qpart::maj(Permutation::identity(6)) == 0);
  CHECK(qpart::maj(Permutation{3, 1, 2}) == 1);
  CHECK(qpart::maj(Permutation{3, 2, 1}) == 3);
  CHECK(qpart::inverse(Permutation{2, 3, 1}) == Permutation{3, 1, 2});
  oracle::PermGen gen(3);
  for (int t = 0; t < 200; ++t) {
    const auto w = gen(gen.size_between(1, 10));
    const Permutation p(w);
    CHECK(qpart::maj(p) == oracle::maj(w));
    CHECK(qpart::inverse(qpart::inverse(p)) == p);
    CHECK(qpart::biased_exponent(w) == oracle::maj(w) + oracle::maj(qpart::inverse(p).word()));
  }
}

TEST_CASE("RSK shape examples") {
  CHECK(qpart::rsk_shape(Permutation::identity(4)) == Partition{4});
  CHECK(qpart::rsk_shape(Permutation{3, 1, 2}) == Partition{2, 1});
  CHECK(qpart::rsk_shape(Permutation{3, 2, 1}) == Partition{1, 1, 1});
  CHECK(qpart::lis(Permutation::identity(5)) == 5);
  CHECK(qpart::lds(Permutation::identity(5)) == 1);
  CHECK(qpart::lis(Permutation{3, 1, 2}) == 2);
  CHECK(qpart::lds(Permutation{3, 1, 2}) == 2);
  CHECK(qpart::lis(Permutation{2, 4, 1, 3}) == 2);
}

TEST_CASE("LIS and LDS read off the RSK shape, exhaustively for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      const Partition shape = qpart::rsk_shape(w);
      CHECK(shape.size() == n);
      CHECK(qpart::lis(w) == shape.first_row());
      CHECK(qpart::lds(w) == shape.length());
      CHECK(qpart::lis(w) == oracle::patience_lis(w));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("LIS and LDS on random permutations up to n = 12") {
  oracle::PermGen gen(2024);
  for (int t = 0; t < 1000; ++t) {
    const auto w = gen(gen.size_between(1, 12));
    const Partition shape = qpart::rsk_shape(w);
    CHECK(qpart::lis(w) == shape.first_row());
    CHECK(qpart::lds(w) == shape.length());
    CHECK(qpart::lis(w) == oracle::patience_lis(w));
    // the RSK shape of the inverse is the same
    CHECK(qpart::rsk_shape(qpart::inverse_word(w)) == shape);
  }
}

TEST_CASE("biased measure") {
  const auto one = qpart::biased_pmf(1, Rational(2));
  CHECK(one.at(Permutation{1}) == Rational(1));
  const auto two = qpart::biased_pmf(2, Rational(2));
  CHECK(two.at(Permutation{1, 2}) == Rational(1, 5));
  CHECK(two.at(Permutation{2, 1}) == Rational(4, 5));
  const auto three = qpart::biased_pmf(3, Rational(2));
  const std::map<Permutation, long> weights{{{1, 2, 3}, 1}, {{1, 3, 2}, 16}, {{2, 1, 3}, 4},
                                            {{2, 3, 1}, 8}, {{3, 1, 2}, 8},  {{3, 2, 1}, 64}};
  for (const auto& [p, w] : weights) CHECK(three.at(p) == Rational(w, 101));
  for (int n = 1; n <= 6; ++n) {
    Rational total;
    for (const auto& [p, pr] : qpart::biased_pmf(n, Rational(3))) total += pr;
    CHECK(total == Rational(1));
    for (const auto& [p, pr] : qpart::biased_pmf(n, Rational(1))) {
      Rational fact(1);
      for (int i = 2; i <= n; ++i) fact *= Rational(i);
      CHECK(pr == fact.reciprocal());
    }
  }
  CHECK_THROWS_AS(qpart::biased_pmf(5, Rational(2), 4), qpart::CapacityError);
}

TEST_CASE("RSK pushforward equals Q") {
  const auto two = qpart::shape_pushforward(2, Rational(2));
  CHECK(two.at(Partition{2}) == Rational(4, 5));
  CHECK(two.at(Partition{1, 1}) == Rational(1, 5));
  const auto three = qpart::shape_pushforward(3, Rational(2));
  CHECK(three.at(Partition{3}) == Rational(64, 101));
  CHECK(three.at(Partition{2, 1}) == Rational(36, 101));
  CHECK(three.at(Partition{1, 1, 1}) == Rational(1, 101));
  CHECK(qpart::shape_pushforward(1, Rational(2)).at(Partition{1}) == Rational(1));
  for (const Rational& q : {Rational(2), Rational(3)}) {
    for (int n = 1; n <= 7; ++n) CHECK(qpart::shape_pushforward(n, q).entries == qpart::q_pmf(n, q).entries);
  }
}

TEST_CASE("LDS tail equals the Q row tail") {
  CHECK(qpart::lds_tail(3, Rational(2), 2) == Rational(1, 101));
  CHECK(qpart::lds_tail(4, Rational(2), 5) == Rational(1));
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n + 1; ++r) CHECK(qpart::lds_tail(n, Rational(2), r) == qpart::q_row_tail_direct(n, Rational(2), r));
  }
}

TEST_CASE("Metropolis chain") {
  CHECK(qpart::metropolis_ratio(Rational(2), 3) * qpart::metropolis_ratio(Rational(2), -3) == Rational(1));
  CHECK(qpart::metropolis_ratio(Rational(2), -2) == Rational(1, 4));
  const auto a = qpart::mcmc_sampler(5, Rational(2), 500, 7);
  const auto b = qpart::mcmc_sampler(5, Rational(2), 500, 7);
  CHECK(a == b);
  qpart::McmcSampler chain(6, Rational(3), 1);
  for (int s = 0; s < 300; ++s) {
    const Permutation& p = chain.step();
    CHECK(chain.exponent() == qpart::biased_exponent(p.word()));
  }
  // q = 1 accepts every proposal
  qpart::McmcSampler flat(4, Rational(1), 9);
  for (int s = 0; s < 100; ++s) flat.step();
  CHECK(flat.accepted() == 100);
}
