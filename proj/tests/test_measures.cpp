#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qpart/measures.hpp"
#include "qpart/qarith.hpp"

using qpart::Interval;
using qpart::Partition;
using qpart::Rational;

namespace {

// Oracle weights straight from the definitions, sharing no code with src/.
Rational p_weight_oracle(const Partition& l, const Rational& q) {
  const Partition c = qpart::conjugate(l);
  Rational d(1);
  for (int col : c.parts()) d *= qpart::pow(q, static_cast<long>(col) * col);
  std::map<int, int> m;
  for (int p : l.parts()) ++m[p];
  for (const auto& [part, mult] : m) d *= oracle::poch(q.reciprocal(), mult, q);
  return d.reciprocal();
}

Rational q_weight_oracle(const Partition& l, const Rational& q) {
  const Partition c = qpart::conjugate(l);
  Rational d(1);
  for (int col : c.parts()) d *= qpart::pow(q, static_cast<long>(col) * col);
  for (int i = 1; i <= l.length(); ++i) {
    for (int j = 1; j <= l.part(i); ++j) {
      const Rational f = Rational(1) - qpart::pow(q, -oracle::hook_by_diagram(l, i, j));
      d *= f * f;
    }
  }
  return d.reciprocal();
}

}  // namespace

TEST_CASE("P weights and pmf examples") {
  const Rational q(2);
  CHECK(qpart::p_weight(Partition{}, q) == Rational(1));
  CHECK(qpart::p_weight(Partition{2}, q) == Rational(1, 2));
  CHECK(qpart::p_weight(Partition{1, 1}, q) == Rational(1, 6));
  const auto p2 = qpart::p_pmf(2, q);
  CHECK(p2.entries.size() == 2);
  CHECK(p2.at(Partition{2}) == Rational(3, 4));
  CHECK(p2.at(Partition{1, 1}) == Rational(1, 4));
  const auto p3 = qpart::p_pmf(3, q);
  CHECK(p3.at(Partition{3}) == Rational(21, 32));
  CHECK(p3.at(Partition{2, 1}) == Rational(21, 64));
  CHECK(p3.at(Partition{1, 1, 1}) == Rational(1, 64));
  CHECK(qpart::p_pmf(4, q).at(Partition{1, 1, 1, 1}) == Rational(1, 4096));
  CHECK(p3.at(Partition{2}) == Rational(0));
  CHECK_THROWS_AS(qpart::p_pmf(3, Rational(1)), std::domain_error);
}

TEST_CASE("Q weights, z and pmf examples") {
  const Rational q(2);
  CHECK(qpart::q_weight(Partition{}, q) == Rational(1));
  CHECK(qpart::q_weight(Partition{3}, q) == Rational(512, 441));
  CHECK(qpart::q_weight(Partition{2, 1}, q) == Rational(32, 49));
  const auto z = qpart::z_table(3, q);
  CHECK(z.values[0] == Rational(1));
  CHECK(z.values[2] == Rational(20, 9));
  CHECK(z.values[3] == Rational(808, 441));
  CHECK(qpart::z_direct(3, q) == Rational(808, 441));
  const auto q2 = qpart::q_pmf(2, q);
  CHECK(q2.at(Partition{2}) == Rational(4, 5));
  CHECK(q2.at(Partition{1, 1}) == Rational(1, 5));
  const auto q3 = qpart::q_pmf(3, q);
  CHECK(q3.at(Partition{3}) == Rational(64, 101));
  CHECK(q3.at(Partition{2, 1}) == Rational(36, 101));
  CHECK(q3.at(Partition{1, 1, 1}) == Rational(1, 101));
  CHECK(qpart::q_pmf(1, Rational(7)).at(Partition{1}) == Rational(1));
}

TEST_CASE("weights match the definition oracles") {
  for (const Rational& q : {Rational(2), Rational(5, 2), Rational(3)}) {
    for (int n = 0; n <= 9; ++n) {
      for (const auto& l : oracle::all_partitions(n)) {
        CHECK(qpart::p_weight(l, q) == p_weight_oracle(l, q));
        CHECK(qpart::q_weight(l, q) == q_weight_oracle(l, q));
      }
    }
  }
}

TEST_CASE("normalization and z recurrence") {
  for (const Rational& q : {Rational(2), Rational(5, 2), Rational(3), Rational(10)}) {
    const auto z = qpart::z_table(14, q);
    for (int n = 0; n <= 14; ++n) {
      CHECK(qpart::p_pmf(n, q).total() == Rational(1));
      CHECK(qpart::q_pmf(n, q).total() == Rational(1));
      CHECK(z.values[static_cast<std::size_t>(n)] == qpart::z_direct(n, q));
    }
  }
}

TEST_CASE("pmf entries cover exactly the partitions of n") {
  const auto pmf = qpart::q_pmf(7, Rational(3));
  std::vector<Partition> keys;
  for (const auto& [l, p] : pmf.entries) {
    keys.push_back(l);
    CHECK(p > Rational(0));
  }
  CHECK(keys == qpart::enumerate_partitions(7));
}

TEST_CASE("first column closed form") {
  const Rational q(2);
  CHECK(qpart::p_first_column(2, q, 1) == Rational(3, 4));
  CHECK(qpart::p_first_column(3, q, 2) == Rational(21, 64));
  CHECK(qpart::p_first_column(3, q, 3) == Rational(1, 64));
  CHECK_THROWS_AS(qpart::p_first_column(3, q, 0), std::domain_error);
  CHECK_THROWS_AS(qpart::p_first_column(3, q, 4), std::domain_error);
  for (const Rational& qq : {Rational(2), Rational(3)}) {
    for (int n = 1; n <= 12; ++n) {
      const auto pmf = qpart::p_pmf(n, qq);
      for (int k = 1; k <= n; ++k) {
        const auto marginal = pmf.mass([k](const Partition& l) { return l.length() == k; });
        CHECK(qpart::p_first_column(n, qq, k) == marginal);
      }
    }
  }
}

TEST_CASE("row tails: direct and Rogers-Selberg") {
  const Rational q(2);
  CHECK(qpart::p_row_tail_direct(3, q, 4) == Rational(1));
  CHECK(qpart::p_row_tail_direct(3, q, 2) == Rational(1, 64));
  CHECK(qpart::q_row_tail_direct(3, q, 2) == Rational(1, 101));
  CHECK(qpart::p_row_tail_rs(3, q, 2) == Rational(1, 64));
  CHECK(qpart::p_row_tail_rs(5, q, 6) == Rational(1));
  for (const Rational& qq : {Rational(2), Rational(3), Rational(7, 3)}) {
    for (int n = 0; n <= 12; ++n) {
      for (int r = 1; r <= n + 2; ++r) CHECK(qpart::p_row_tail_rs(n, qq, r) == qpart::p_row_tail_direct(n, qq, r));
    }
  }
}

TEST_CASE("tilde measures") {
  const Rational q(2);
  CHECK(qpart::tilde_p_pmf(Partition{}, q, 20) == qpart::sp_prod_interval(q, 20));
  const Interval one = qpart::tilde_p_pmf(Partition{1}, q, 30);
  CHECK(Interval(Rational(288788, 1000000), Rational(288789, 1000000)).contains(one));
  CHECK(qpart::p_weight(Partition{2}, q) + qpart::p_weight(Partition{1, 1}, q) == qpart::euler_coeff(2, q));
  CHECK(qpart::tilde_p_size_pmf(0, q, 25) == qpart::sp_prod_interval(q, 25));
  CHECK(qpart::tilde_p_size_pmf(1, q, 30) == one);
  // size marginals: total mass up to N plus the tail q^{-N}/(q-1) encloses 1
  for (const Rational& qq : {Rational(2), Rational(3)}) {
    Interval total(Rational(0));
    Interval totalq(Rational(0));
    const int N = 30;
    for (int n = 0; n <= N; ++n) {
      total += qpart::tilde_p_size_pmf(n, qq, 40);
      totalq += qpart::tilde_q_size_pmf(n, qq, 40);
    }
    CHECK(total.lo() <= Rational(1));
    CHECK(Rational(1) <= total.hi() + qpart::pow(qq, -N) / (qq - Rational(1)));
    CHECK(totalq.lo() <= Rational(1));
  }
  const Interval tq = qpart::tilde_q_pmf(Partition{2, 1}, q, 40);
  CHECK(tq == qpart::dp_prod_interval(q, 40) * qpart::q_weight(Partition{2, 1}, q));
}

TEST_CASE("hook rewrite of the tilde P weight") {
  CHECK(qpart::tilde_p_hook_identity(Partition{}, Rational(2)));
  CHECK(qpart::tilde_p_hook_identity(Partition{2, 1}, Rational(2)));
  CHECK(qpart::tilde_p_hook_identity(Partition{4, 3, 3, 1}, Rational(2)));
  for (int n = 0; n <= 12; ++n) {
    for (const auto& l : qpart::enumerate_partitions(n)) CHECK(qpart::tilde_p_hook_identity(l, Rational(5, 2)));
  }
}

TEST_CASE("schur principal specialization") {
  CHECK(qpart::schur_principal(Partition{1}, 0, Rational(2)) == Rational(2));
  CHECK(qpart::schur_principal(Partition{}, 3, Rational(2)) == Rational(1));
}

TEST_CASE("schur principal against a literal finite-variable evaluation") {
  // s_lambda(x_1..x_m) <= s_lambda(x_1, ...) <= s_lambda(x_1..x_m) + H^n - H_m^n,
  // since p_1^n dominates s_lambda coefficientwise; H = sum of all x_i.
  const int m = 24;
  for (const Rational& q : {Rational(2), Rational(3)}) {
    for (int k = 0; k <= 1; ++k) {
      std::vector<Rational> x;
      Rational hm;
      for (int i = 0; i < m; ++i) {
        x.push_back(qpart::pow(q, -(k + i)));
        hm += x.back();
      }
      const Rational h = qpart::pow(q, -k) / (Rational(1) - q.reciprocal());
      for (int n = 0; n <= 4; ++n) {
        const Rational tail = qpart::pow(h, n) - qpart::pow(hm, n);
        for (const auto& l : qpart::enumerate_partitions(n)) {
          const Rational finite = oracle::schur_finite(l, x);
          const Rational exact = qpart::schur_principal(l, k, q);
          CHECK(finite <= exact);
          CHECK(exact <= finite + tail);
        }
      }
    }
  }
}

TEST_CASE("Schur specialization proportionality") {
  CHECK(qpart::construction1_check(1, Rational(2)));
  CHECK(qpart::construction1_check(3, Rational(2)));
  CHECK(qpart::construction1_check(6, Rational(3)));
  // the ratio is common across the partitions of 3
  const Rational q(2);
  Rational ratio;
  for (const auto& l : qpart::enumerate_partitions(3)) {
    const Rational r = qpart::schur_principal(l, 0, q) * qpart::schur_principal(l, 1, q) / qpart::q_weight(l, q);
    if (ratio.is_zero()) ratio = r;
    CHECK(r == ratio);
  }
  // the conjugated indexing reproduces Q at the conjugate shape
  for (int n = 1; n <= 7; ++n) {
    const auto pmf = qpart::q_pmf(n, q);
    Rational total;
    for (const auto& l : qpart::enumerate_partitions(n)) {
      const Partition c = qpart::conjugate(l);
      total += qpart::schur_principal(c, 0, q) * qpart::schur_principal(c, 1, q);
    }
    for (const auto& l : qpart::enumerate_partitions(n)) {
      const Partition c = qpart::conjugate(l);
      CHECK(qpart::schur_principal(c, 0, q) * qpart::schur_principal(c, 1, q) / total == pmf.at(c));
    }
  }
}

TEST_CASE("symmetry under q -> 1/q and conjugation") {
  CHECK(qpart::symmetry_check(1, Rational(2)));
  CHECK(qpart::symmetry_check(10, Rational(3)));
  CHECK(qpart::symmetry_check(6, Rational(5, 2)));
  CHECK_THROWS_AS(qpart::symmetry_check(3, Rational(1)), std::domain_error);
}

TEST_CASE("first column of tilde P") {
  CHECK(qpart::tilde_first_column_check(1, Rational(2), 30, 40));
  CHECK(qpart::tilde_first_column_check(3, Rational(2), 40, 40));
  CHECK(qpart::tilde_first_column_check(0, Rational(2), 10, 40));
  const auto rep = qpart::tilde_first_column_report(2, Rational(3), 30, 40);
  CHECK(rep.ok);
  CHECK(rep.closed_form.overlaps(rep.summed));
}

TEST_CASE("one-row concentration for large q") {
  const Rational q = qpart::pow(Rational(2), 10);
  const auto pmf = qpart::p_pmf(5, q);
  const Rational row = pmf.at(Partition{5});
  CHECK(row == oracle::poch(q.reciprocal(), 5, q) / (Rational(1) - q.reciprocal()));
  CHECK(row > Rational(99, 100));
}
