#include "qpart/bounds.hpp"

#include <stdexcept>

#include "qpart/qarith.hpp"

namespace qpart {

namespace {

void require_q_at_least_two(const Rational& q, const char* what) {
  if (q < Rational(2)) throw std::domain_error(std::string(what) + " requires q >= 2");
}

void require_row_range(int n, int r, const char* what) {
  if (r < 1 || r > n - 1) throw std::domain_error(std::string(what) + " requires 1 <= r <= n - 1");
}

/// Bracket of R^{1/D} for rational R > 0: [floor(S R^{1/D}) / S, (floor(S R^{1/D}) + 1) / S].
Interval root_enclosure(const Rational& value, unsigned long degree) {
  if (value.sign() <= 0) throw std::domain_error("root of a nonpositive rational");
  constexpr unsigned long kScaleBits = 40;
  mpz_class scale_pow;  // S^D = 2^(bits * D)
  mpz_ui_pow_ui(scale_pow.get_mpz_t(), 2, kScaleBits * degree);
  mpz_class floor_scaled;
  mpz_class num = value.numerator() * scale_pow;
  mpz_fdiv_q(floor_scaled.get_mpz_t(), num.get_mpz_t(), value.value().get_den_mpz_t());
  mpz_class root;
  mpz_root(root.get_mpz_t(), floor_scaled.get_mpz_t(), degree);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, kScaleBits);
  return Interval(Rational(root, scale), Rational(mpz_class(root + 1), scale));
}

/// base^(p/D) enclosure for rational exponent with denominator dividing D.
Interval pow_rational_exponent(const Rational& base, const Rational& exponent) {
  const Rational scaled = exponent * Rational(kRootDenominator);
  if (!scaled.is_integer()) throw std::domain_error("exponent denominator must divide the root denominator");
  const long p = scaled.numerator().get_si();
  return root_enclosure(pow(base, p), static_cast<unsigned long>(kRootDenominator));
}

Rational one_minus_inv(const Rational& q) { return Rational(1) - q.reciprocal(); }

/// Bracket shared by the P and Q upper bounds:
/// q^{-(2n-2r+2)} + q^{-(n+1)} / (1 - q^{-(2n+1)}).
Rational upper_core(int n, int r, const Rational& q) {
  return pow(q, -(2L * n - 2L * r + 2)) +
         pow(q, -(n + 1L)) / (Rational(1) - pow(q, -(2L * n + 1)));
}

}  // namespace

Interval sqrt_enclosure(long x) {
  if (x < 0) throw std::domain_error("sqrt of a negative integer");
  const mpz_class scaled = mpz_class(x) * kRootDenominator * kRootDenominator;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  const mpz_class up = (root * root == scaled) ? root : mpz_class(root + 1);
  return Interval(Rational(root, mpz_class(kRootDenominator)), Rational(up, mpz_class(kRootDenominator)));
}

Interval pow_enclosure(const Rational& base, const Interval& exponent) {
  if (base.sign() <= 0) throw std::domain_error("pow_enclosure needs a positive base");
  const Interval at_lo = pow_rational_exponent(base, exponent.lo());
  const Interval at_hi = pow_rational_exponent(base, exponent.hi());
  // base^e is monotone in e: increasing for base >= 1, decreasing otherwise.
  if (base >= Rational(1)) return Interval(at_lo.lo(), at_hi.hi());
  return Interval(at_hi.lo(), at_lo.hi());
}

long strengthened_sqrt_exponent(int n) {
  const Interval s = sqrt_enclosure(2L * n);
  // ceil(sqrt(2n)): the upper end is exact when 2n is a perfect square.
  mpz_class c;
  const Rational up = s.hi();
  mpz_cdiv_q(c.get_mpz_t(), up.value().get_num_mpz_t(), up.value().get_den_mpz_t());
  return 4 * c.get_si();
}

Interval literal_sqrt_exponent(int n) { return sqrt_enclosure(2L * n) * Rational(4); }

Rational pbound_upper(int n, int r, const Rational& q) {
  require_q_at_least_two(q, "pbound_upper");
  require_row_range(n, r, "pbound_upper");
  const Rational a = one_minus_inv(q);
  return upper_core(n, r, q) / (a * a);
}

Rational pbound_lower(int n, int r, const Rational& q) {
  require_q_at_least_two(q, "pbound_lower");
  require_row_range(n, r, "pbound_lower");
  const Rational a = one_minus_inv(q);
  const long nn = n, rr = r;
  return pow(q, -(2 * nn - 2 * rr + 2)) - pow(q, -(nn + 1)) / a -
         pow(q, -(2 * nn - 2 * rr + 3)) / (a * a) - pow(q, -(3 * nn - 3 * rr + 4)) / pow(a, 3) -
         pow(q, -(2 * nn + 3)) / ((a * a) * (Rational(1) - pow(q, -(2 * nn + 3))));
}

Rational qbound_upper(int n, int r, const Rational& q) {
  require_q_at_least_two(q, "qbound_upper");
  require_row_range(n, r, "qbound_upper");
  return upper_core(n, r, q) / pow(one_minus_inv(q), 1 + strengthened_sqrt_exponent(n));
}

Interval qbound_upper_literal(int n, int r, const Rational& q) {
  require_q_at_least_two(q, "qbound_upper_literal");
  require_row_range(n, r, "qbound_upper_literal");
  const Interval exponent = literal_sqrt_exponent(n) + Interval(Rational(1));
  return pow_enclosure(one_minus_inv(q).reciprocal(), exponent) * upper_core(n, r, q);
}

Rational qbound_lower(int n, int r, const Rational& q) {
  const Rational a = one_minus_inv(q);
  return (Rational(1) - pow(q, -n)) * pow(a, 4) * pbound_lower(n, r, q);
}

bool neumann_check(const Rational& q, int dmax) {
  require_q_at_least_two(q, "neumann_check");
  const Rational a = one_minus_inv(q);
  const Rational sharper = a - pow(q, -2);
  Rational product(1);
  for (int d = 1; d <= dmax; ++d) {
    product *= Rational(1) - pow(q, -d);
    if (!(a * a <= product && product <= a && sharper <= product)) return false;
  }
  return true;
}

bool boundconst_check(int n, const Rational& q) {
  require_q_at_least_two(q, "boundconst_check");
  if (n < 1) throw std::domain_error("boundconst_check needs n >= 1");
  const Rational z = z_table(n, q).values.back();
  const Rational lower = euler_coeff(n, q);
  const Rational upper = ((pow(q, n) - Rational(1)) * pow(one_minus_inv(q), 6)).reciprocal();
  return lower <= z && z <= upper;
}

bool prelim_check(const Rational& q, long truncation) {
  require_q_at_least_two(q, "prelim_check");
  return dp_prod_interval(q, truncation).lo() >= pow(one_minus_inv(q), 4);
}

bool compare_sandwich_check(int n, const Rational& q) {
  require_q_at_least_two(q, "compare_sandwich_check");
  if (n < 1) throw std::domain_error("compare_sandwich_check needs n >= 1");
  const Pmf p = p_pmf(n, q);
  const Pmf qm = q_pmf(n, q);
  const Rational a = one_minus_inv(q);
  const Rational low_factor = (Rational(1) - pow(q, -n)) * pow(a, 4);
  const Rational high_factor = pow(a, 1 - strengthened_sqrt_exponent(n));
  const Interval literal_exponent = literal_sqrt_exponent(n) + Interval(Rational(-1));
  const Rational literal_factor = pow_enclosure(a.reciprocal(), literal_exponent).lo();
  for (const auto& [lambda, prob_p] : p.entries) {
    const Rational& prob_q = qm.at(lambda);
    if (!(low_factor * prob_p <= prob_q)) return false;
    if (!(prob_q <= high_factor * prob_p)) return false;
    if (!(prob_q <= literal_factor * prob_p)) return false;
  }
  return true;
}

BoundReport corollary_report(int n, const Rational& q, int k) {
  require_q_at_least_two(q, "corollary_check");
  if (k < 1 || k > n) throw std::domain_error("corollary_check needs 1 <= k <= n");
  const Rational a = one_minus_inv(q);
  const Rational column = p_first_column(n, q, k);
  BoundReport row;
  row.measure = MeasureKind::Q;
  row.statistic = Statistic::Column;
  row.n = n;
  row.r_or_k = k;
  row.q = q;
  row.exact = q_pmf(n, q).mass([k](const Partition& l) { return l.length() == k; });
  row.lower = (Rational(1) - pow(q, -n)) * pow(a, 4) * column;
  row.upper = column / pow(a, 1 + strengthened_sqrt_exponent(n));
  row.slack_low = row.exact - row.lower;
  row.slack_high = row.upper - row.exact;
  return row;
}

bool corollary_check(int n, const Rational& q, int k) {
  const BoundReport row = corollary_report(n, q, k);
  if (!row.holds()) return false;
  const Interval exponent = literal_sqrt_exponent(n) + Interval(Rational(1));
  const Rational literal_upper =
      pow_enclosure(one_minus_inv(q).reciprocal(), exponent).lo() * p_first_column(n, q, k);
  return row.exact <= literal_upper;
}

std::vector<BoundReport> bounds_report(int n_min, int n_max, RPolicy policy,
                                       const std::vector<Rational>& q_set, MeasureKind measure,
                                       Statistic statistic) {
  if (statistic == Statistic::Column && measure != MeasureKind::Q) {
    throw std::domain_error("column bounds are reported for the Q measure only");
  }
  std::vector<BoundReport> rows;
  for (const auto& q : q_set) {
    for (int n = std::max(n_min, 1); n <= n_max; ++n) {
      const int last = statistic == Statistic::Row ? n - 1 : n;
      int from = 1, to = last;
      if (policy.single) {
        if (*policy.single < 1 || *policy.single > last) continue;
        from = to = *policy.single;
      }
      if (from > to) continue;
      if (statistic == Statistic::Column) {
        for (int k = from; k <= to; ++k) rows.push_back(corollary_report(n, q, k));
        continue;
      }
      const Pmf pmf = measure == MeasureKind::P ? p_pmf(n, q) : q_pmf(n, q);
      for (int r = from; r <= to; ++r) {
        BoundReport row;
        row.measure = measure;
        row.statistic = statistic;
        row.n = n;
        row.r_or_k = r;
        row.q = q;
        row.exact = pmf.mass([r](const Partition& l) { return l.first_row() < r; });
        if (measure == MeasureKind::P) {
          row.lower = pbound_lower(n, r, q);
          row.upper = pbound_upper(n, r, q);
        } else {
          row.lower = qbound_lower(n, r, q);
          row.upper = qbound_upper(n, r, q);
        }
        row.slack_low = row.exact - row.lower;
        row.slack_high = row.upper - row.exact;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace qpart
