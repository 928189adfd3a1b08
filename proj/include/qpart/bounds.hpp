#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpart/interval.hpp"
#include "qpart/measures.hpp"
#include "qpart/rational.hpp"

namespace qpart {

/// Which statistic a BoundReport row bounds.
enum class Statistic { Row, Column };

struct BoundReport {
  MeasureKind measure = MeasureKind::P;
  Statistic statistic = Statistic::Row;
  int n = 0;
  int r_or_k = 0;
  Rational q;
  Rational lower;
  Rational exact;
  Rational upper;
  Rational slack_low;   ///< exact - lower
  Rational slack_high;  ///< upper - exact

  bool holds() const { return lower <= exact && exact <= upper; }
};

// --- real exponents --------------------------------------------------------

/// Denominator used for the rational brackets of sqrt(2n) and of real powers.
inline constexpr long kRootDenominator = 256;

/// [floor(D sqrt(x)) / D, ceil(D sqrt(x)) / D] for a nonnegative integer x.
Interval sqrt_enclosure(long x);
/// Encloses base^e for base > 0 and every real e in `exponent`, where the
/// exponent endpoints have denominators dividing kRootDenominator.
Interval pow_enclosure(const Rational& base, const Interval& exponent);

/// 4 * ceil(sqrt(2n)): the integer exponent that replaces 4 sqrt(2n).
long strengthened_sqrt_exponent(int n);
/// Certified enclosure of 4 sqrt(2n).
Interval literal_sqrt_exponent(int n);

// --- P^r and Q^r bounds ----------------------------------------------------

/// Upper bound on P^r_{n,q} for q >= 2, 1 <= r <= n - 1.
Rational pbound_upper(int n, int r, const Rational& q);
/// Lower bound on P^r_{n,q}; may be negative.
Rational pbound_lower(int n, int r, const Rational& q);

/// Upper bound on Q^r_{n,q} with 4 sqrt(2n) replaced by 4 ceil(sqrt(2n)).
Rational qbound_upper(int n, int r, const Rational& q);
/// Enclosure of the upper bound with the literal real exponent 1 + 4 sqrt(2n).
Interval qbound_upper_literal(int n, int r, const Rational& q);
/// (1 - q^{-n}) (1 - 1/q)^4 * pbound_lower.
Rational qbound_lower(int n, int r, const Rational& q);

// --- inequality predicates -------------------------------------------------

/// (1-1/q)^2 <= prod_{i<=d}(1-q^{-i}) <= 1-1/q and the sharper
/// 1 - 1/q - 1/q^2 <= prod_{i<=d}(1-q^{-i}), for d = 1..dmax.
bool neumann_check(const Rational& q, int dmax);

/// 1/(q^n (1/q)_n) <= z(n,q) <= 1/((q^n - 1)(1 - 1/q)^6).
bool boundconst_check(int n, const Rational& q);

/// dp_prod_interval(q, M).lo >= (1 - 1/q)^4.
bool prelim_check(const Rational& q, long truncation);

/// For every lambda of n >= 1:
/// (1-q^{-n})(1-1/q)^4 P(lambda) <= Q(lambda) <= P(lambda) / (1-1/q)^{-1+4 ceil(sqrt(2n))},
/// and the upper bound with the literal exponent -1 + 4 sqrt(2n) also holds
/// against a certified lower enclosure.
bool compare_sandwich_check(int n, const Rational& q);

/// Q-probability of lambda'_1 = k against the corollary's bounds built on the
/// closed form for P_{n,q}(lambda'_1 = k); same exponent treatment as above.
bool corollary_check(int n, const Rational& q, int k);
BoundReport corollary_report(int n, const Rational& q, int k);

/// Either every admissible r (1..n-1, or 1..n for the column statistic) or one value.
struct RPolicy {
  std::optional<int> single;
  static RPolicy all() { return {}; }
  static RPolicy only(int r) { return {r}; }
};

/// One row per (q, n, r) in that nesting order. Row statistics use the
/// P or Q theorem bounds; Column with MeasureKind::Q uses the corollary.
std::vector<BoundReport> bounds_report(int n_min, int n_max, RPolicy policy,
                                       const std::vector<Rational>& q_set,
                                       MeasureKind measure = MeasureKind::P,
                                       Statistic statistic = Statistic::Row);

}  // namespace qpart
