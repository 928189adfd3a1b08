#include "qpart/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpart {

Series::Series(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw std::invalid_argument("series needs at least a constant term");
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, std::size_t k, std::size_t order) {
  Series s(order);
  if (k <= order) s.c_[k] = c;
  return s;
}

const Rational& Series::coeff(std::size_t k) const {
  if (k > order()) {
    throw std::domain_error("coefficient u^" + std::to_string(k) + " beyond truncation order " +
                            std::to_string(order()));
  }
  return c_[k];
}

void Series::set_coeff(std::size_t k, Rational value) {
  if (k > order()) throw std::domain_error("coefficient index beyond truncation order");
  c_[k] = std::move(value);
}

Series Series::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("series inverse needs a nonzero constant term");
  const Rational inv0 = c_[0].reciprocal();
  Series out(order());
  out.c_[0] = inv0;
  for (std::size_t k = 1; k <= order(); ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!c_[j].is_zero()) acc += c_[j] * out.c_[k - j];
    }
    out.c_[k] = -acc * inv0;
  }
  return out;
}

Series& Series::operator+=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t order = std::min(a.order(), b.order());
  Series out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b.c_[j].is_zero()) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

Series series_geom_factor(const Rational& q, long i, std::size_t order) {
  if (q.is_zero()) throw std::domain_error("geometric factor with q = 0");
  const Rational ratio = pow(q, -i);
  Series s(order);
  Rational term(1);
  for (std::size_t k = 0; k <= order; ++k) {
    s.set_coeff(k, term);
    term *= ratio;
  }
  return s;
}

}  // namespace qpart
