#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpart/rational.hpp"

namespace qpart {

/// Truncated power series in the formal variable u: c_0 + c_1 u + ... + c_N u^N.
///
/// Binary operations truncate to the smaller order of their operands. Asking
/// for a coefficient beyond the order throws instead of silently extending.
class Series {
 public:
  /// Zero series of order `order`.
  explicit Series(std::size_t order) : c_(order + 1) {}
  explicit Series(std::vector<Rational> coefficients);

  static Series constant(const Rational& c, std::size_t order);
  static Series one(std::size_t order) { return constant(Rational(1), order); }
  /// c * u^k truncated at `order`.
  static Series monomial(const Rational& c, std::size_t k, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  std::span<const Rational> coefficients() const { return c_; }

  /// Coefficient of u^k; std::domain_error when k > order().
  const Rational& coeff(std::size_t k) const;
  void set_coeff(std::size_t k, Rational value);

  /// Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> c_;
};

inline Series series_mul(const Series& a, const Series& b) { return a * b; }
inline const Rational& series_coeff(const Series& a, std::size_t k) { return a.coeff(k); }

/// Expansion of 1/(1 - u/q^i) to order N: coefficients q^{-ik}.
Series series_geom_factor(const Rational& q, long i, std::size_t order);

}  // namespace qpart
