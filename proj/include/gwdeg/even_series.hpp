#ifndef GWDEG_EVEN_SERIES_HPP
#define GWDEG_EVEN_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gwdeg/rational.hpp"

namespace gwdeg {

/// Truncated power series in t holding only even powers.
///
/// Entry h is the coefficient of t^{2h}; coefficients are known for
/// 0 <= h <= order(). Binary operations truncate to the smaller order, so a
/// result never carries a coefficient that depends on unknown terms.
class EvenSeries {
public:
  /// Throws std::invalid_argument if `coeffs` is empty.
  explicit EvenSeries(std::vector<Rational> coeffs);

  static EvenSeries constant(const Rational& value, int order);
  static EvenSeries zero(int order) { return constant(Rational(0), order); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](std::size_t h) const { return coeffs_[h]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  EvenSeries truncated(int order) const;

  EvenSeries& operator+=(const EvenSeries& rhs);
  EvenSeries& operator-=(const EvenSeries& rhs);
  EvenSeries& operator*=(const Rational& scalar);

  friend EvenSeries operator+(EvenSeries lhs, const EvenSeries& rhs) { return lhs += rhs; }
  friend EvenSeries operator-(EvenSeries lhs, const EvenSeries& rhs) { return lhs -= rhs; }
  friend EvenSeries operator*(EvenSeries lhs, const Rational& scalar) { return lhs *= scalar; }
  friend EvenSeries operator*(const Rational& scalar, EvenSeries rhs) { return rhs *= scalar; }
  friend EvenSeries operator*(const EvenSeries& lhs, const EvenSeries& rhs);

  friend bool operator==(const EvenSeries&, const EvenSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// S(t) = sin(t/2) / (t/2) through t^{2*order}.
EvenSeries sine_ratio(int order);

/// Multiplicative inverse. Throws std::domain_error ("non-unit series")
/// when the constant term is zero.
EvenSeries inverse(const EvenSeries& a);

/// a^m by binary powering; m < 0 goes through inverse(a).
EvenSeries int_pow(const EvenSeries& a, long m);

/// Formal exponential; the constant term must be zero.
EvenSeries exp(const EvenSeries& a);

/// Formal logarithm; the constant term must be one.
EvenSeries log(const EvenSeries& a);

/// Substitution t -> d*t: coefficient h is multiplied by d^{2h}.
EvenSeries scale_variable(const EvenSeries& a, long d);

}  // namespace gwdeg

#endif  // GWDEG_EVEN_SERIES_HPP
