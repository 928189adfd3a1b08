#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qpart/interval.hpp"
#include "qpart/partition.hpp"
#include "qpart/rational.hpp"

namespace qpart {

enum class MeasureKind { P, Q };

std::string to_string(MeasureKind m);

/// Exact probability table over the partitions of n, in canonical
/// (lexicographically decreasing) order.
struct Pmf {
  using Table = std::map<Partition, Rational, std::greater<>>;

  int n = 0;
  Rational q;
  MeasureKind measure = MeasureKind::P;
  Table entries;

  /// Probability of lambda; zero for partitions of another size.
  Rational at(const Partition& lambda) const;
  Rational total() const;
  /// Probability of the event pred(lambda).
  Rational mass(const std::function<bool(const Partition&)>& pred) const;
};

// --- P_{n,q} -----------------------------------------------------------------

/// 1 / (prod_j q^{(lambda'_j)^2} (1/q)_{m_j(lambda)}).
Rational p_weight(const Partition& lambda, const Rational& q);
/// P_{n,q}(lambda) = q^n (1/q)_n p_weight(lambda, q). Throws std::logic_error if
/// the table does not sum to exactly 1.
Pmf p_pmf(int n, const Rational& q);

/// Closed form for P_{n,q}(lambda'_1 = k), 1 <= k <= n.
Rational p_first_column(int n, const Rational& q, int k);

/// P^r_{n,q}: probability that lambda_1 < r, by summing the pmf.
Rational p_row_tail_direct(int n, const Rational& q, int r);
/// P^r_{n,q} via the Rogers-Selberg expansion: q^n (1/q)_n times the u^n
/// coefficient of prod_i 1/(1-u/q^i) * sum_m (-1)^m (1-u/q^{2m}) u^{rm}
/// (u/q)_{m-1} / (q^{rm^2 + C(m,2)} (1/q)_m). Only m with rm <= n contribute.
Rational p_row_tail_rs(int n, const Rational& q, int r);

// --- Q_{n,q} -----------------------------------------------------------------

/// 1 / (q^{|lambda| + 2 n(lambda)} prod_s (1 - q^{-h(s)})^2). Valid for q > 0, q != 1.
Rational q_weight(const Partition& lambda, const Rational& q);

struct ZTable {
  Rational q;
  std::vector<Rational> values;  ///< z(0..N)
};

/// z(0..N) from z(n) = 1/(q^n - 1) * sum_{i=1}^{n} z(n-i) / (1/q)_i, z(0) = 1.
ZTable z_table(int max_n, const Rational& q);
/// z(n, q) as the sum of q_weight over the partitions of n.
Rational z_direct(int n, const Rational& q);

/// Q_{n,q}(lambda) = q_weight / z(n, q). Normalizes by the direct partition
/// sum, so it is also valid for 0 < q < 1.
Pmf q_pmf(int n, const Rational& q);

Rational q_row_tail_direct(int n, const Rational& q, int r);

// --- tilde (all-sizes) measures ---------------------------------------------

/// tilde P_q(lambda) = prod_{i>=1}(1 - q^{-i}) * p_weight(lambda, q), enclosed.
Interval tilde_p_pmf(const Partition& lambda, const Rational& q, long truncation);
/// tilde Q_q(lambda) = prod_{i>=1,j>=0}(1 - q^{-(i+j)}) * q_weight(lambda, q), enclosed.
Interval tilde_q_pmf(const Partition& lambda, const Rational& q, long truncation);
/// tilde P_q(|lambda| = n) = prod_i (1 - q^{-i}) * euler_coeff(n, q).
Interval tilde_p_size_pmf(int n, const Rational& q, long truncation);
/// tilde Q_q(|lambda| = n) = prod_{i,j} (1 - q^{-(i+j)}) * z(n, q).
Interval tilde_q_size_pmf(int n, const Rational& q, long truncation);

/// Checks prod_j q^{(lambda'_j)^2} (1/q)_{m_j} = q^{|lambda|+2n(lambda)} prod_{a(s)=0} (1 - q^{-h(s)}).
bool tilde_p_hook_identity(const Partition& lambda, const Rational& q);

/// s_lambda(q^{-k}, q^{-k-1}, ...) = q^{-k|lambda|} q^{-n(lambda)} / prod_s (1 - q^{-h(s)}).
Rational schur_principal(const Partition& lambda, int k, const Rational& q);

/// lambda -> s_lambda(1, 1/q, ...) s_lambda(1/q, 1/q^2, ...), normalized over
/// the partitions of n, must coincide with q_pmf(n, q). With n(lambda) =
/// sum (i-1) lambda_i the conjugated indexing gives Q_{n,q}(lambda') instead.
bool construction1_check(int n, const Rational& q);

/// Q_{n,q}(lambda) == Q_{n,1/q}(lambda') for every lambda of n.
bool symmetry_check(int n, const Rational& q);

struct FirstColumnCheck {
  bool ok = false;
  Interval closed_form;  ///< prod_i(1-q^{-i}) q^{-k^2} / (1/q)_k^2
  Interval summed;       ///< sum_{n<=N} tildeP(|lambda|=n) P_{n,q}(lambda'_1=k) + tail
};

/// Compares the tilde-P closed form for lambda'_1 = k against the size
/// decomposition summed to n = N with the certified tail sum_{n>N} q^{-n}.
FirstColumnCheck tilde_first_column_report(int k, const Rational& q, int max_n, long truncation);
bool tilde_first_column_check(int k, const Rational& q, int max_n, long truncation);

}  // namespace qpart
