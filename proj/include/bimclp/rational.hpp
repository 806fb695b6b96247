#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bimclp {

/// Raised on malformed textual input. `position` is a 0-based character
/// offset for scalar parses; line-oriented parsers also fill `line`.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : std::runtime_error(what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value);

  /// Parses "25", "-4.002", "+0.60", "3/5" or "-7/2".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const;

  /// "p/q", or "p" when the denominator is 1. Parses back to the same value.
  std::string to_string() const;

  /// Exact decimal when one exists ("0.6", "-4.002"), otherwise "p/q".
  /// Always parses back to the same value.
  std::string to_text() const;

  /// True when the value has a finite decimal expansion (denominator 2^a 5^b).
  bool has_exact_decimal() const;

  /// Shortest exact decimal when one exists; otherwise rounds to
  /// `significant_digits` significant digits and sets `*lossy`.
  std::string to_decimal(bool* lossy = nullptr, int significant_digits = 12) const;

  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Least common multiple of the denominators seen so far; used to clear
/// fractions in integer kernels.
Integer lcm(const Integer& a, const Integer& b);

}  // namespace bimclp

template <>
struct std::hash<bimclp::Rational> {
  std::size_t operator()(const bimclp::Rational& r) const;
};
