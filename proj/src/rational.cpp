#include "bimclp/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace bimclp {

namespace {

Rational pow10(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

// Inserts a decimal point `scale` digits from the right of |n| and trims
// trailing fractional zeros.
std::string place_point(const Integer& n, long scale, bool negative) {
  std::string digits = Integer(abs(n)).get_str();
  if (scale > 0) {
    if (static_cast<long>(digits.size()) <= scale) {
      digits.insert(0, static_cast<std::size_t>(scale) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale), ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  } else if (scale < 0) {
    if (n != 0) digits.append(static_cast<std::size_t>(-scale), '0');
  }
  if (negative && digits != "0") digits.insert(0, "-");
  return digits;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t int_begin = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  std::string int_part(text.substr(int_begin, i - int_begin));

  if (i < n && text[i] == '/') {
    if (int_part.empty()) throw ParseError("expected digits before '/'", i);
    const std::size_t den_begin = ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) throw ParseError("expected digits after '/'", i);
    if (i != n) throw ParseError("unexpected character in rational", i);
    Integer num(int_part, 10), den(std::string(text.substr(den_begin, i - den_begin)), 10);
    if (den == 0) throw ParseError("zero denominator", den_begin);
    Rational r(num, den);
    return negative ? -r : r;
  }

  std::string frac_part;
  if (i < n && text[i] == '.') {
    const std::size_t frac_begin = ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    frac_part = std::string(text.substr(frac_begin, i - frac_begin));
    if (frac_part.empty()) throw ParseError("expected digits after '.'", i);
  }
  if (int_part.empty()) throw ParseError("expected digits", int_begin);
  if (i != n) throw ParseError("unexpected character in number", i);

  Integer num(int_part + frac_part, 10);
  Rational r = Rational(num) / pow10(static_cast<long>(frac_part.size()));
  return negative ? -r : r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_text() const {
  return has_exact_decimal() ? to_decimal() : to_string();
}

bool Rational::has_exact_decimal() const {
  Integer d = value_.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
  return d == 1;
}

std::string Rational::to_decimal(bool* lossy, int significant_digits) const {
  if (lossy) *lossy = false;
  if (has_exact_decimal()) {
    long scale = 0;
    Rational scaled = *this;
    while (!scaled.is_integer()) {
      scaled *= Rational(10);
      ++scale;
    }
    return place_point(scaled.numerator(), scale, sign() < 0);
  }
  if (lossy) *lossy = true;

  const Rational mag = abs();
  long exponent = static_cast<long>(std::floor(std::log10(mag.to_double())));
  while (pow10(exponent) > mag) --exponent;
  while (pow10(exponent + 1) <= mag) ++exponent;

  long scale = significant_digits - 1 - exponent;
  Rational scaled = mag * pow10(scale);
  // round half away from zero
  Integer q = scaled.numerator() / scaled.denominator();
  if (Rational(q) + Rational(1, 2) <= scaled) q += 1;
  return place_point(q, scale, sign() < 0);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace bimclp

std::size_t std::hash<bimclp::Rational>::operator()(const bimclp::Rational& r) const {
  return std::hash<std::string>{}(r.to_string());
}
