#ifndef GWDEG_HODGE_HPP
#define GWDEG_HODGE_HPP

#include <string>
#include <vector>

#include "gwdeg/even_series.hpp"
#include "gwdeg/rational.hpp"

namespace gwdeg {

// Closed-form and series-extracted Hodge integral values. Only the numbers
// are modeled; the tautological classes themselves are not.

enum class HodgeKind { alpha, kappa_integral, psi_lambda };

struct HodgeValue {
  HodgeKind kind;
  std::vector<int> indices;  // (q) or (h, i)
  Rational value;
};

std::string to_string(HodgeKind kind);

/// alpha_q = |B_{2q}| / (2q (2q)!), the t^{2q} coefficient of
/// log((t/2) / sin(t/2)). Throws std::invalid_argument for q < 1.
Rational alpha(int q);

/// log(1 / S(t)) through t^{2*order}, computed by formal series operations
/// alone. Its t^{2q} coefficient is an independent check of alpha(q).
EvenSeries alpha_via_log(int order);

/// Integral of lambda_q lambda_{q-1} kappa_{q-2} over M_q:
/// |B_{2q}| / (2q * 2^{2q-1} * (2q-1)!!). Throws for q < 2.
Rational kappa_integral(int q);

/// alpha(q) / kappa_integral(q); expected to equal faber_expected_ratio(q).
Rational faber_ratio_check(int q);

/// 2^{q-1} / q!
Rational faber_expected_ratio(int q);

/// Integral of psi_1^{2h-2+i} lambda_{h-i} over M_{h,1}, read off as the
/// t^{2h} coefficient of S^{-1} Q^i / i!. Requires h >= 1 and 0 <= i <= h.
Rational psi_lambda_integral(int h, int i);

/// All psi_lambda_integral(h, i) for 1 <= h <= max_h, sharing one series
/// computation per i. Row h-1 holds i = 0..h.
std::vector<std::vector<Rational>> psi_lambda_table(int max_h);

}  // namespace gwdeg

#endif  // GWDEG_HODGE_HPP
