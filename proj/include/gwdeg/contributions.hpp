#ifndef GWDEG_CONTRIBUTIONS_HPP
#define GWDEG_CONTRIBUTIONS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "gwdeg/even_series.hpp"
#include "gwdeg/rational.hpp"

namespace gwdeg {

/// Genus g of an embedded curve and its anticanonical degree k = -K_X . beta.
/// The normal bundle degree entering the partition sum is
/// integral_C c_1(N^*) = 2 - 2g - k.
struct GeometrySignature {
  int curve_genus = 0;
  int anti_k = 0;

  /// Throws std::invalid_argument on negative genus or anti_k.
  GeometrySignature(int genus, int anti_k);

  long series_exponent() const { return 2L * curve_genus - 2 + anti_k; }
  long normal_degree() const { return 2L - 2L * curve_genus - anti_k; }
};

/// Contribution value that may be undefined in the geometric model.
struct ContributionValue {
  std::optional<Rational> value;

  bool defined() const { return value.has_value(); }
  static ContributionValue undefined() { return {}; }
};

/// Which multiple-cover scaling rule extends degree-1 contributions to d > 1.
enum class CoverModel {
  geometric,  // C_0(h,d) = d^{2h-3} C_0(h,1); C_1(0,d) = sigma(d)/d; C_1(h>0,d) = 0
  mtheory,    // C^M_g(h,d) = d^{2g+2h-3} C_g(h,1)
};

std::string to_string(CoverModel model);
/// Throws std::invalid_argument on an unknown name.
CoverModel parse_cover_model(std::string_view name);

/// S(t)^{2g-2+k}; coefficient h is C_g(h, X, beta) for a class with
/// -K_X . beta = k (k = 0 gives the Calabi-Yau degree-1 series).
EvenSeries contribution_series(const GeometrySignature& sig, int order);

/// Same value as the t^{2h} coefficient of contribution_series, computed as
/// a weighted sum over partitions of h:
///   sum_tau (2-2g-k)^l / |Aut_tau| * prod_i alpha(h_i).
Rational contribution_partition_sum(const GeometrySignature& sig, int h);

/// Degree-d contribution of a genus g curve to genus g+h (Calabi-Yau case).
/// The geometric model is defined only for g = 0, g = 1, or d = 1; other
/// cells come back undefined.
ContributionValue contribution_degree(int genus, int h, long d, CoverModel model);

}  // namespace gwdeg

#endif  // GWDEG_CONTRIBUTIONS_HPP
