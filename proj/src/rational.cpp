#include "gwdeg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace gwdeg {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  // U+2212 MINUS SIGN is accepted as an alias for '-'.
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (rest.starts_with(kUnicodeMinus)) {
    negative = true;
    rest.remove_prefix(kUnicodeMinus.size());
  } else if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  std::string_view num_text = rest;
  std::string_view den_text = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num_text = rest.substr(0, slash);
    den_text = rest.substr(slash + 1);
  }
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw std::invalid_argument("rational: malformed value \"" + std::string(text) + "\"");
  }

  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (negative) {
    num = -num;
  }
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("rational: inverse of zero");
  }
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  std::string out = value_.get_num().get_str();
  if (value_.get_den() != 1) {
    out += '/';
    out += value_.get_den().get_str();
  }
  return out;
}

std::string Rational::to_decimal(int digits) const {
  digits = std::max(digits, 0);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  const Integer num = ::abs(value_.get_num());
  const Integer& den = value_.get_den();
  // round(|p| * 10^digits / q), halves away from zero
  Integer scaled = (2 * num * scale + den) / (2 * den);

  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  if (sign() < 0 && scaled != 0) {
    body.insert(0, 1, '-');
  }
  return body;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace gwdeg
