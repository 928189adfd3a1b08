#include "qpart/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpart {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return Interval(*mn, *mx);
}

Interval operator*(const Interval& a, const Rational& s) {
  if (s.sign() >= 0) return Interval(a.lo_ * s, a.hi_ * s);
  return Interval(a.hi_ * s, a.lo_ * s);
}

std::string to_json_string(const Interval& iv) {
  return "{\"lo\":\"" + iv.lo().str() + "\",\"hi\":\"" + iv.hi().str() + "\"}";
}

}  // namespace qpart
