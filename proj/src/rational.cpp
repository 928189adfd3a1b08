#include "qpart/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace qpart {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  std::string buf(s);
  if (!buf.empty() && buf[0] == '+') buf.erase(0, 1);
  return mpz_class(buf, 10);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  }
  mpz_class num = parse_integer(num_text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+') {
      throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in rational literal: '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(v_.get_den(), v_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  const bool negative = sign() < 0;
  const mpz_class num = ::abs(v_.get_num());
  const mpz_class den = v_.get_den();

  // Find e with 10^e <= |v| < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto scaled_ge = [&](long exp10) {  // |v| >= 10^exp10
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    return exp10 >= 0 ? num >= p * den : num * p >= den;
  };
  while (!scaled_ge(e)) --e;
  while (scaled_ge(e + 1)) ++e;

  // m = round_half_even(|v| * 10^(digits-1-e)), an integer with `digits` digits.
  const long shift = digits - 1 - e;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  mpz_class n2 = num, d2 = den;
  if (shift >= 0) n2 *= p; else d2 *= p;
  mpz_class m, rem;
  mpz_fdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  const int c = cmp(2 * rem, d2);
  if (c > 0 || (c == 0 && mpz_odd_p(m.get_mpz_t()))) m += 1;
  std::string mantissa = m.get_str();
  if (static_cast<long>(mantissa.size()) > digits) {  // rounded up to 10^digits
    ++e;
    mantissa.pop_back();
  }
  // Strip trailing zeros like %g.
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();

  std::string out = negative ? "-" : "";
  if (e < -5 || e >= digits) {
    out += mantissa.substr(0, 1);
    if (mantissa.size() > 1) out += "." + mantissa.substr(1);
    out += (e < 0 ? "e-" : "e+");
    std::string ex = std::to_string(std::labs(e));
    if (ex.size() < 2) ex = "0" + ex;
    out += ex;
  } else if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mantissa;
  } else {
    const auto int_len = static_cast<std::size_t>(e + 1);
    if (mantissa.size() <= int_len) {
      out += mantissa + std::string(int_len - mantissa.size(), '0');
    } else {
      out += mantissa.substr(0, int_len) + "." + mantissa.substr(int_len);
    }
  }
  return out;
}

Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base.is_zero()) throw std::domain_error("zero raised to a negative power");
    return pow(base.reciprocal(), -e);
  }
  mpz_class num, den;
  const auto ue = static_cast<unsigned long>(e);
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), ue);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qpart
