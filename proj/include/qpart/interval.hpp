#pragma once

#include <string>

#include "qpart/rational.hpp"

namespace qpart {

/// Closed rational interval [lo, hi] certified to contain some real value.
class Interval {
 public:
  Interval() = default;
  explicit Interval(Rational point) : lo_(point), hi_(std::move(point)) {}
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool is_nonnegative() const { return lo_.sign() >= 0; }

  Interval& operator+=(const Interval& o);
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }

  /// Product of two intervals (general sign handling).
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Scales by an exact rational; reverses endpoints for negative factors.
  friend Interval operator*(const Interval& a, const Rational& s);
  friend Interval operator*(const Rational& s, const Interval& a) { return a * s; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

std::string to_json_string(const Interval& iv);

}  // namespace qpart
