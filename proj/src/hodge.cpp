#include "gwdeg/hodge.hpp"

#include <algorithm>
#include <stdexcept>

#include "gwdeg/number_theory.hpp"

namespace gwdeg {

namespace {

// Q(t) = sum_{q>=1} alpha_q t^{2q} assembled from the Bernoulli closed form.
EvenSeries alpha_series(int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  for (int q = 1; q <= order; ++q) {
    coeffs[static_cast<std::size_t>(q)] = alpha(q);
  }
  return EvenSeries(std::move(coeffs));
}

}  // namespace

std::string to_string(HodgeKind kind) {
  switch (kind) {
    case HodgeKind::alpha:
      return "alpha";
    case HodgeKind::kappa_integral:
      return "kappa_integral";
    case HodgeKind::psi_lambda:
      return "psi_lambda";
  }
  return "unknown";
}

Rational alpha(int q) {
  if (q < 1) {
    throw std::invalid_argument("alpha: index must be >= 1, got " + std::to_string(q));
  }
  return bernoulli(2 * q).abs() / (Rational(2L * q) * Rational(factorial(2L * q)));
}

EvenSeries alpha_via_log(int order) { return log(inverse(sine_ratio(order))); }

Rational kappa_integral(int q) {
  if (q < 2) {
    throw std::invalid_argument("kappa_integral: index must be >= 2, got " + std::to_string(q));
  }
  const Rational two_pow = Rational(2).pow(2L * q - 1);
  return bernoulli(2 * q).abs() / Rational(2L * q) / (two_pow * double_factorial(2L * q - 1));
}

Rational faber_ratio_check(int q) { return alpha(q) / kappa_integral(q); }

Rational faber_expected_ratio(int q) {
  if (q < 1) {
    throw std::invalid_argument("faber_expected_ratio: index must be >= 1");
  }
  return Rational(2).pow(q - 1) / Rational(factorial(q));
}

Rational psi_lambda_integral(int h, int i) {
  if (h < 1 || i < 0 || i > h) {
    throw std::invalid_argument("psi_lambda_integral: need h >= 1 and 0 <= i <= h, got (" +
                                std::to_string(h) + ", " + std::to_string(i) + ")");
  }
  const EvenSeries term = inverse(sine_ratio(h)) * int_pow(alpha_series(h), i);
  return term[static_cast<std::size_t>(h)] / Rational(factorial(i));
}

std::vector<std::vector<Rational>> psi_lambda_table(int max_h) {
  if (max_h < 1) {
    return {};
  }
  const EvenSeries s_inv = inverse(sine_ratio(max_h));
  const EvenSeries q_series = alpha_series(max_h);

  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(max_h));
  EvenSeries q_power = EvenSeries::constant(Rational(1), max_h);
  for (int i = 0; i <= max_h; ++i) {
    const EvenSeries term = s_inv * q_power;
    const Rational inv_fact = Rational(factorial(i)).inverse();
    for (int h = std::max(i, 1); h <= max_h; ++h) {
      rows[static_cast<std::size_t>(h - 1)].push_back(term[static_cast<std::size_t>(h)] * inv_fact);
    }
    q_power = q_power * q_series;
  }
  return rows;
}

}  // namespace gwdeg
