#include "gwdeg/even_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gwdeg/number_theory.hpp"

namespace gwdeg {

EvenSeries::EvenSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series: at least one coefficient is required");
  }
}

EvenSeries EvenSeries::constant(const Rational& value, int order) {
  if (order < 0) {
    throw std::invalid_argument("series: negative order " + std::to_string(order));
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = value;
  return EvenSeries(std::move(coeffs));
}

EvenSeries EvenSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw std::invalid_argument("series: cannot truncate order " + std::to_string(this->order()) +
                                " to " + std::to_string(order));
  }
  return EvenSeries({coeffs_.begin(), coeffs_.begin() + order + 1});
}

EvenSeries& EvenSeries::operator+=(const EvenSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t h = 0; h < coeffs_.size(); ++h) {
    coeffs_[h] += rhs.coeffs_[h];
  }
  return *this;
}

EvenSeries& EvenSeries::operator-=(const EvenSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t h = 0; h < coeffs_.size(); ++h) {
    coeffs_[h] -= rhs.coeffs_[h];
  }
  return *this;
}

EvenSeries& EvenSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

EvenSeries operator*(const EvenSeries& lhs, const EvenSeries& rhs) {
  const std::size_t n = std::min(lhs.coeffs_.size(), rhs.coeffs_.size());
  std::vector<Rational> out(n);
  for (std::size_t h = 0; h < n; ++h) {
    Rational acc;
    for (std::size_t k = 0; k <= h; ++k) {
      if (!lhs.coeffs_[k].is_zero() && !rhs.coeffs_[h - k].is_zero()) {
        acc += lhs.coeffs_[k] * rhs.coeffs_[h - k];
      }
    }
    out[h] = std::move(acc);
  }
  return EvenSeries(std::move(out));
}

EvenSeries sine_ratio(int order) {
  if (order < 0) {
    throw std::invalid_argument("sine_ratio: negative order " + std::to_string(order));
  }
  // sin(x)/x = sum (-1)^h x^{2h} / (2h+1)!, evaluated at x = t/2
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  for (long h = 0; h <= order; ++h) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 4, static_cast<unsigned long>(h));
    den *= factorial(2 * h + 1);
    coeffs.emplace_back(Integer(h % 2 == 0 ? 1 : -1), den);
  }
  return EvenSeries(std::move(coeffs));
}

EvenSeries inverse(const EvenSeries& a) {
  if (a[0].is_zero()) {
    throw std::domain_error("non-unit series: constant term is zero");
  }
  const std::size_t n = a.coefficients().size();
  const Rational lead_inv = a[0].inverse();
  std::vector<Rational> out(n);
  out[0] = lead_inv;
  for (std::size_t h = 1; h < n; ++h) {
    Rational acc;
    for (std::size_t k = 1; k <= h; ++k) {
      acc += a[k] * out[h - k];
    }
    out[h] = -acc * lead_inv;
  }
  return EvenSeries(std::move(out));
}

EvenSeries int_pow(const EvenSeries& a, long m) {
  EvenSeries base = m < 0 ? inverse(a) : a;
  unsigned long e = m < 0 ? static_cast<unsigned long>(-m) : static_cast<unsigned long>(m);
  EvenSeries result = EvenSeries::constant(Rational(1), a.order());
  while (e != 0) {
    if (e & 1U) {
      result = result * base;
    }
    e >>= 1U;
    if (e != 0) {
      base = base * base;
    }
  }
  return result;
}

EvenSeries exp(const EvenSeries& a) {
  if (!a[0].is_zero()) {
    throw std::domain_error("exp: nonzero constant term");
  }
  // With u = t^2 and b = exp(a): u b' = (u a') b, so n b_n = sum_k k a_k b_{n-k}.
  const std::size_t n = a.coefficients().size();
  std::vector<Rational> b(n);
  b[0] = Rational(1);
  for (std::size_t h = 1; h < n; ++h) {
    Rational acc;
    for (std::size_t k = 1; k <= h; ++k) {
      if (!a[k].is_zero()) {
        acc += Rational(static_cast<long long>(k)) * a[k] * b[h - k];
      }
    }
    b[h] = acc / Rational(static_cast<long long>(h));
  }
  return EvenSeries(std::move(b));
}

EvenSeries log(const EvenSeries& a) {
  if (a[0] != Rational(1)) {
    throw std::domain_error("log: constant term not 1");
  }
  // a = exp(c) gives n a_n = sum_{k=1}^{n} k c_k a_{n-k}; solve for c_n.
  const std::size_t n = a.coefficients().size();
  std::vector<Rational> c(n);
  for (std::size_t h = 1; h < n; ++h) {
    Rational acc = Rational(static_cast<long long>(h)) * a[h];
    for (std::size_t k = 1; k < h; ++k) {
      if (!c[k].is_zero()) {
        acc -= Rational(static_cast<long long>(k)) * c[k] * a[h - k];
      }
    }
    c[h] = acc / Rational(static_cast<long long>(h));
  }
  return EvenSeries(std::move(c));
}

EvenSeries scale_variable(const EvenSeries& a, long d) {
  if (d < 1) {
    throw std::invalid_argument("scale_variable: factor must be positive, got " + std::to_string(d));
  }
  const Rational d2 = Rational(d) * Rational(d);
  std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
  Rational factor(1);
  for (auto& c : out) {
    c *= factor;
    factor *= d2;
  }
  return EvenSeries(std::move(out));
}

}  // namespace gwdeg
