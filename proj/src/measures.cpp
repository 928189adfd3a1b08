#include "qpart/measures.hpp"

#include <stdexcept>

#include "qpart/kernels.hpp"
#include "qpart/qarith.hpp"
#include "qpart/series.hpp"

namespace qpart {

namespace {

void require_q_above_one(const Rational& q, const char* what) {
  if (q <= Rational(1)) throw std::domain_error(std::string(what) + " requires q > 1");
}

/// q^n (1/q)_n
Rational p_normalizer(int n, const Rational& q) {
  return pow(q, n) * qpoch(q.reciprocal(), n, q);
}

Pmf make_pmf(int n, const Rational& q, MeasureKind kind, const std::vector<Partition>& parts,
             std::vector<Rational> probs) {
  Pmf pmf;
  pmf.n = n;
  pmf.q = q;
  pmf.measure = kind;
  for (std::size_t i = 0; i < parts.size(); ++i) pmf.entries.emplace(parts[i], std::move(probs[i]));
  return pmf;
}

}  // namespace

std::string to_string(MeasureKind m) { return m == MeasureKind::P ? "P" : "Q"; }

Rational Pmf::at(const Partition& lambda) const {
  const auto it = entries.find(lambda);
  return it == entries.end() ? Rational() : it->second;
}

Rational Pmf::total() const {
  Rational t;
  for (const auto& [lambda, p] : entries) t += p;
  return t;
}

Rational Pmf::mass(const std::function<bool(const Partition&)>& pred) const {
  Rational t;
  for (const auto& [lambda, p] : entries) {
    if (pred(lambda)) t += p;
  }
  return t;
}

Rational p_weight(const Partition& lambda, const Rational& q) {
  require_q_above_one(q, "p_weight");
  const Rational qinv = q.reciprocal();
  Rational denom = pow(q, colsq_sum(lambda));
  for (const auto& [part, mult] : m_counts(lambda)) denom *= qpoch(qinv, mult, q);
  return denom.reciprocal();
}

Pmf p_pmf(int n, const Rational& q) {
  require_q_above_one(q, "p_pmf");
  const auto parts = enumerate_partitions(n);
  const Rational norm = p_normalizer(n, q);
  auto probs = par::tabulate(std::span<const Partition>(parts),
                             [&](const Partition& l) { return norm * p_weight(l, q); });
  Pmf pmf = make_pmf(n, q, MeasureKind::P, parts, std::move(probs));
  if (pmf.total() != Rational(1)) throw std::logic_error("P_{n,q} table does not sum to 1");
  return pmf;
}

Rational p_first_column(int n, const Rational& q, int k) {
  require_q_above_one(q, "p_first_column");
  if (k < 1 || k > n) throw std::domain_error("p_first_column needs 1 <= k <= n");
  const Rational x = q.reciprocal();
  const Rational num = qpoch(x, n, q) * qpoch(x, n - 1, q);
  const Rational den = pow(q, static_cast<long>(k) * k - k) * qpoch(x, k, q) *
                       qpoch(x, k - 1, q) * qpoch(x, n - k, q);
  return num / den;
}

Rational p_row_tail_direct(int n, const Rational& q, int r) {
  require_q_above_one(q, "p_row_tail_direct");
  const auto parts = enumerate_first_row_below(n, r);
  const Rational norm = p_normalizer(n, q);
  return norm * par::sum(std::span<const Partition>(parts),
                         [&](const Partition& l) { return p_weight(l, q); });
}

Rational p_row_tail_rs(int n, const Rational& q, int r) {
  require_q_above_one(q, "p_row_tail_rs");
  if (r < 1) throw std::domain_error("p_row_tail_rs needs r >= 1");
  if (n < 0) throw std::domain_error("p_row_tail_rs needs n >= 0");
  const auto order = static_cast<std::size_t>(n);
  const Rational qinv = q.reciprocal();

  std::vector<Rational> euler(order + 1);
  for (int k = 0; k <= n; ++k) euler[static_cast<std::size_t>(k)] = euler_coeff(k, q);
  const Series euler_product(std::move(euler));

  const Series one = Series::one(order);
  const Series u_over_q = Series::monomial(qinv, 1, order);
  Series bracket(order);
  for (long m = 0; static_cast<long>(r) * m <= n; ++m) {
    const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
    const long exponent = static_cast<long>(r) * m * m + m * (m - 1) / 2;
    const Rational scalar = sign / (pow(q, exponent) * qpoch(qinv, m, q));
    const Series linear = one - Series::monomial(pow(q, -2 * m), 1, order);
    const Series shift = Series::monomial(Rational(1), static_cast<std::size_t>(r * m), order);
    bracket += linear * qpoch(u_over_q, m - 1, q) * shift * scalar;
  }
  return p_normalizer(n, q) * (euler_product * bracket).coeff(order);
}

Rational q_weight(const Partition& lambda, const Rational& q) {
  if (q.sign() <= 0 || q == Rational(1)) throw std::domain_error("q_weight requires q > 0, q != 1");
  Rational denom = pow(q, lambda.size() + 2 * n_lambda(lambda));
  for (int h : hook_lengths(lambda)) {
    const Rational f = Rational(1) - pow(q, -h);
    denom *= f * f;
  }
  return denom.reciprocal();
}

ZTable z_table(int max_n, const Rational& q) {
  require_q_above_one(q, "z_table");
  if (max_n < 0) throw std::domain_error("z_table needs N >= 0");
  const Rational qinv = q.reciprocal();
  std::vector<Rational> inv_poch(static_cast<std::size_t>(max_n) + 1);
  for (int i = 0; i <= max_n; ++i) inv_poch[static_cast<std::size_t>(i)] = qpoch(qinv, i, q).reciprocal();

  ZTable table{q, {Rational(1)}};
  for (int n = 1; n <= max_n; ++n) {
    Rational acc;
    for (int i = 1; i <= n; ++i) {
      acc += table.values[static_cast<std::size_t>(n - i)] * inv_poch[static_cast<std::size_t>(i)];
    }
    table.values.push_back(acc / (pow(q, n) - Rational(1)));
  }
  return table;
}

Rational z_direct(int n, const Rational& q) {
  const auto parts = enumerate_partitions(n);
  return par::sum(std::span<const Partition>(parts),
                  [&](const Partition& l) { return q_weight(l, q); });
}

Pmf q_pmf(int n, const Rational& q) {
  const auto parts = enumerate_partitions(n);
  auto weights = par::tabulate(std::span<const Partition>(parts),
                               [&](const Partition& l) { return q_weight(l, q); });
  Rational z;
  for (const auto& w : weights) z += w;
  for (auto& w : weights) w /= z;
  Pmf pmf = make_pmf(n, q, MeasureKind::Q, parts, std::move(weights));
  if (pmf.total() != Rational(1)) throw std::logic_error("Q_{n,q} table does not sum to 1");
  return pmf;
}

Rational q_row_tail_direct(int n, const Rational& q, int r) {
  const auto parts = enumerate_first_row_below(n, r);
  const Rational selected = par::sum(std::span<const Partition>(parts),
                                     [&](const Partition& l) { return q_weight(l, q); });
  return selected / z_direct(n, q);
}

Interval tilde_p_pmf(const Partition& lambda, const Rational& q, long truncation) {
  return sp_prod_interval(q, truncation) * p_weight(lambda, q);
}

Interval tilde_q_pmf(const Partition& lambda, const Rational& q, long truncation) {
  return dp_prod_interval(q, truncation) * q_weight(lambda, q);
}

Interval tilde_p_size_pmf(int n, const Rational& q, long truncation) {
  return sp_prod_interval(q, truncation) * euler_coeff(n, q);
}

Interval tilde_q_size_pmf(int n, const Rational& q, long truncation) {
  return dp_prod_interval(q, truncation) * z_table(n, q).values.back();
}

bool tilde_p_hook_identity(const Partition& lambda, const Rational& q) {
  require_q_above_one(q, "tilde_p_hook_identity");
  const Rational lhs = p_weight(lambda, q).reciprocal();
  Rational rhs = pow(q, lambda.size() + 2 * n_lambda(lambda));
  for (const Cell s : cells(lambda)) {
    if (arm(lambda, s) == 0) rhs *= Rational(1) - pow(q, -hook(lambda, s));
  }
  return lhs == rhs;
}

Rational schur_principal(const Partition& lambda, int k, const Rational& q) {
  require_q_above_one(q, "schur_principal");
  if (k < 0) throw std::domain_error("schur_principal needs k >= 0");
  Rational denom = pow(q, static_cast<long>(k) * lambda.size() + n_lambda(lambda));
  for (int h : hook_lengths(lambda)) denom *= Rational(1) - pow(q, -h);
  return denom.reciprocal();
}

bool construction1_check(int n, const Rational& q) {
  require_q_above_one(q, "construction1_check");
  const auto parts = enumerate_partitions(n);
  auto degrees = par::tabulate(std::span<const Partition>(parts), [&](const Partition& l) {
    return schur_principal(l, 0, q) * schur_principal(l, 1, q);
  });
  Rational total;
  for (const auto& d : degrees) total += d;
  const Pmf reference = q_pmf(n, q);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (degrees[i] / total != reference.at(parts[i])) return false;
  }
  return true;
}

bool symmetry_check(int n, const Rational& q) {
  if (q.sign() <= 0 || q == Rational(1)) throw std::domain_error("symmetry_check requires q > 0, q != 1");
  const Pmf forward = q_pmf(n, q);
  const Pmf inverted = q_pmf(n, q.reciprocal());
  for (const auto& [lambda, p] : forward.entries) {
    if (inverted.at(conjugate(lambda)) != p) return false;
  }
  return true;
}

FirstColumnCheck tilde_first_column_report(int k, const Rational& q, int max_n, long truncation) {
  require_q_above_one(q, "tilde_first_column_check");
  if (k < 0 || max_n < k) throw std::domain_error("tilde_first_column_check needs 0 <= k <= N");
  const Interval sp = sp_prod_interval(q, truncation);
  const Rational qinv = q.reciprocal();
  const Rational poch_k = qpoch(qinv, k, q);
  const Rational closed = pow(q, -static_cast<long>(k) * k) / (poch_k * poch_k);

  Rational partial;
  for (int n = k; n <= max_n; ++n) {
    if (k == 0 && n > 0) break;  // only the empty partition has lambda'_1 = 0
    const Rational column = (n == 0) ? Rational(1) : p_first_column(n, q, k);
    partial += euler_coeff(n, q) * column;
  }
  // sum_{n>N} tildeP(|lambda| = n) <= sum_{n>N} q^{-n}.
  const Rational tail = pow(q, -max_n) / (q - Rational(1));
  const Interval summed_core = sp * partial;
  FirstColumnCheck out;
  out.closed_form = sp * closed;
  out.summed = Interval(summed_core.lo(), summed_core.hi() + tail);
  out.ok = out.closed_form.overlaps(out.summed);
  return out;
}

bool tilde_first_column_check(int k, const Rational& q, int max_n, long truncation) {
  return tilde_first_column_report(k, q, max_n, truncation).ok;
}

}  // namespace qpart
