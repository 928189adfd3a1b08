#include "qpart/qarith.hpp"

#include <stdexcept>
#include <string>

namespace qpart {

namespace {

void require_q_above_one(const Rational& q, const char* what) {
  if (q <= Rational(1)) throw std::domain_error(std::string(what) + " requires q > 1");
}

}  // namespace

Rational qpoch(const Rational& x, long n, const Rational& q) {
  if (q.is_zero()) throw std::domain_error("qpoch with q = 0");
  if (n < -1) throw std::domain_error("qpoch defined only for n >= -1");
  if (n == -1) {
    const Rational denom = Rational(1) - x * q;
    if (denom.is_zero()) throw std::domain_error("qpoch(x, -1, q) with 1 - x q = 0");
    return denom.reciprocal();
  }
  const Rational qinv = q.reciprocal();
  Rational out(1);
  Rational term = x;  // x / q^k
  for (long k = 0; k < n; ++k) {
    out *= Rational(1) - term;
    term *= qinv;
  }
  return out;
}

Series qpoch(const Series& x, long n, const Rational& q) {
  if (q.is_zero()) throw std::domain_error("qpoch with q = 0");
  if (n < -1) throw std::domain_error("qpoch defined only for n >= -1");
  const auto order = x.order();
  const Series one = Series::one(order);
  if (n == -1) return (one - x * q).inverse();
  const Rational qinv = q.reciprocal();
  Series out = one;
  Rational scale(1);
  for (long k = 0; k < n; ++k) {
    out = out * (one - x * scale);
    scale *= qinv;
  }
  return out;
}

Rational euler_coeff(long n, const Rational& q) {
  require_q_above_one(q, "euler_coeff");
  if (n < 0) throw std::domain_error("euler_coeff needs n >= 0");
  return (pow(q, n) * qpoch(q.reciprocal(), n, q)).reciprocal();
}

EulerConvergenceReport euler_convergence_report(long n, const Rational& q, long max_factors) {
  require_q_above_one(q, "euler_convergence_report");
  if (n < 0 || max_factors < 1 || max_factors < n) {
    throw std::domain_error("euler_convergence_report needs 0 <= n <= M and M >= 1");
  }
  EulerConvergenceReport rep;
  rep.n = n;
  rep.q = q;
  rep.max_factors = max_factors;
  rep.limit = euler_coeff(n, q);

  const auto order = static_cast<std::size_t>(n);
  Series product = Series::one(order);
  if (n == 0) rep.partial.push_back(product.coeff(order));
  for (long m = 1; m <= max_factors; ++m) {
    product = product * series_geom_factor(q, m, order);
    if (m >= n) rep.partial.push_back(product.coeff(order));
  }
  for (std::size_t j = 0; j < rep.partial.size(); ++j) {
    if (j > 0 && rep.partial[j] < rep.partial[j - 1]) {
      throw std::logic_error("Euler partial coefficients decreased");
    }
    if (rep.partial[j] > rep.limit) {
      throw std::logic_error("Euler partial coefficient exceeds the limit");
    }
  }
  rep.gap = rep.limit - rep.partial.back();
  return rep;
}

Rational sp_partial(const Rational& q, long m) {
  return qpoch(q.reciprocal(), m, q);
}

Interval sp_prod_interval(const Rational& q, long truncation) {
  require_q_above_one(q, "sp_prod_interval");
  if (truncation < 1) throw std::domain_error("sp_prod_interval needs M >= 1");
  const Rational partial = sp_partial(q, truncation);
  Rational tail = Rational(1) - pow(q, -truncation) / (q - Rational(1));
  if (tail.sign() < 0) tail = Rational(0);
  return Interval(partial * tail, partial);
}

Interval dp_prod_interval(const Rational& q, long truncation) {
  require_q_above_one(q, "dp_prod_interval");
  if (truncation < 1) throw std::domain_error("dp_prod_interval needs M >= 1");
  Rational partial(1);
  for (long k = 1; k <= truncation; ++k) {
    partial *= pow(Rational(1) - pow(q, -k), k);
  }
  // sum_{k>M} k x^k = x^{M+1} ((M+1) - M x) / (1 - x)^2 with x = 1/q.
  const Rational x = q.reciprocal();
  const Rational one(1);
  const Rational tail_sum = pow(x, truncation + 1) *
                            (Rational(truncation + 1) - Rational(truncation) * x) /
                            ((one - x) * (one - x));
  if (tail_sum >= one) {
    throw std::domain_error("dp_prod_interval: truncation too small for a positive tail bound");
  }
  return Interval(partial * (one - tail_sum), partial);
}

}  // namespace qpart
