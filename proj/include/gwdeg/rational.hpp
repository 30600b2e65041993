#ifndef GWDEG_RATIONAL_HPP
#define GWDEG_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gwdeg {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and every
/// arithmetic result is canonicalized, so two equal values always have
/// identical numerator and denominator.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}
  Rational(const Integer& value) : value_(value) {}
  /// Throws std::domain_error when `den` is zero.
  Rational(const Integer& num, const Integer& den);
  Rational(long long num, long long den);

  /// Parses "p/q" or "p" (optional leading sign). Non-reduced input is
  /// accepted and normalized. Throws std::invalid_argument on malformed
  /// text and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  /// Multiplicative inverse. Throws std::domain_error on zero.
  Rational inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long exponent) const;

  /// Canonical "p/q" form, or "p" when q = 1.
  std::string to_string() const;
  /// Fixed-point rendering rounded half away from zero to `digits` places.
  std::string to_decimal(int digits) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace gwdeg

#endif  // GWDEG_RATIONAL_HPP
