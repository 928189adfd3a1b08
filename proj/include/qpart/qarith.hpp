#pragma once

#include <cstddef>
#include <vector>

#include "qpart/interval.hpp"
#include "qpart/rational.hpp"
#include "qpart/series.hpp"

namespace qpart {

/// (x)_n = (1 - x)(1 - x/q)...(1 - x/q^{n-1}).
///
/// (x)_0 = 1. For n = -1 this returns 1/(1 - x q), the only extension that
/// makes the m = 0 term of the Rogers-Selberg tail expansion collapse to 1.
/// Throws std::domain_error when q = 0, n < -1, or 1 - x q vanishes at n = -1.
Rational qpoch(const Rational& x, long n, const Rational& q);

/// Series analogue of qpoch: (x)_n with x a power series in u.
/// For n = -1 returns the series inverse of 1 - x q.
Series qpoch(const Series& x, long n, const Rational& q);

/// Coefficient of u^n in prod_{i>=1} 1/(1 - u/q^i), i.e. 1/(q^n (1/q)_n).
Rational euler_coeff(long n, const Rational& q);

struct EulerConvergenceReport {
  long n = 0;
  Rational q;
  long max_factors = 0;
  /// partial[j] is the u^n coefficient of prod_{i=1}^{n+j} 1/(1 - u/q^i).
  std::vector<Rational> partial;
  Rational limit;
  Rational gap;  ///< limit - partial.back()
};

/// Builds the partial Euler products with the Series arithmetic and checks
/// that the u^n coefficient climbs monotonically toward euler_coeff(n, q).
/// Violations throw std::logic_error.
EulerConvergenceReport euler_convergence_report(long n, const Rational& q, long max_factors);

/// Exact partial product prod_{i=1}^{m} (1 - 1/q^i).
Rational sp_partial(const Rational& q, long m);

/// Encloses prod_{i>=1} (1 - 1/q^i) using M exact factors and the tail bound
/// prod_{i>M} (1 - q^{-i}) >= 1 - q^{-M}/(q - 1).
Interval sp_prod_interval(const Rational& q, long truncation);

/// Encloses prod_{i>=1} prod_{j>=0} (1 - q^{-(i+j)}) = prod_{k>=1} (1 - q^{-k})^k
/// with M exact factors and the tail bound 1 - sum_{k>M} k q^{-k}. Throws
/// std::domain_error if that tail bound is not positive (raise M).
Interval dp_prod_interval(const Rational& q, long truncation);

}  // namespace qpart
