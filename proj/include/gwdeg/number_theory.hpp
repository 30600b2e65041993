#ifndef GWDEG_NUMBER_THEORY_HPP
#define GWDEG_NUMBER_THEORY_HPP

#include "gwdeg/rational.hpp"

namespace gwdeg {

/// Bernoulli number B_n with the convention B_1 = -1/2.
///
/// Computed from sum_{k=0}^{n} binom(n+1, k) B_k = 0 and memoized in a
/// process-wide table; safe to call concurrently.
Rational bernoulli(int n);

/// sigma(d), the sum of the positive divisors of d. Throws
/// std::invalid_argument for d < 1.
Rational divisor_sum(long d);

/// n!! for odd n >= 1. Throws std::invalid_argument otherwise.
Rational double_factorial(long n);

Integer factorial(long n);
Integer binomial(long n, long k);

}  // namespace gwdeg

#endif  // GWDEG_NUMBER_THEORY_HPP
