#include "gwdeg/number_theory.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwdeg {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) {
    throw std::invalid_argument("bernoulli: negative index " + std::to_string(n));
  }
  std::lock_guard lock(bernoulli_mutex);
  while (static_cast<int>(bernoulli_table.size()) <= n) {
    const long m = static_cast<long>(bernoulli_table.size());
    // (m+1) B_m = -sum_{k<m} binom(m+1, k) B_k
    Rational acc;
    for (long k = 0; k < m; ++k) {
      acc += Rational(binomial(m + 1, k)) * bernoulli_table[static_cast<std::size_t>(k)];
    }
    bernoulli_table.push_back(-acc / Rational(m + 1));
  }
  return bernoulli_table[static_cast<std::size_t>(n)];
}

Rational divisor_sum(long d) {
  if (d < 1) {
    throw std::invalid_argument("divisor_sum: argument must be positive, got " + std::to_string(d));
  }
  long sum = 0;
  for (long i = 1; i * i <= d; ++i) {
    if (d % i == 0) {
      sum += i;
      if (i != d / i) {
        sum += d / i;
      }
    }
  }
  return Rational(sum);
}

Rational double_factorial(long n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("double_factorial: argument must be odd and positive, got " +
                                std::to_string(n));
  }
  Integer out = 1;
  for (long k = n; k > 1; k -= 2) {
    out *= k;
  }
  return Rational(out);
}

Integer factorial(long n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: negative argument");
  }
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace gwdeg
