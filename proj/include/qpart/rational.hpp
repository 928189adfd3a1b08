#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qpart {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal values always have identical numerator and denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of the arithmetic

  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& v) : v_(v) {}
  explicit Rational(mpq_class v);

  /// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed
  /// input or a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational reciprocal() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// "numerator/denominator", always with the slash (e.g. "1/1", "-3/2").
  std::string str() const;

  /// Closest double; used only for statistics and display.
  double to_double() const { return v_.get_d(); }

  /// Decimal rendering with `digits` significant digits, rounded
  /// half-to-even from the exact value.
  std::string to_decimal(int digits = 12) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// base^e for any integer e; throws std::domain_error for 0^negative.
Rational pow(const Rational& base, long e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qpart
