#include "gwdeg/contributions.hpp"

#include <stdexcept>

#include "gwdeg/hodge.hpp"
#include "gwdeg/number_theory.hpp"
#include "gwdeg/partitions.hpp"

namespace gwdeg {

GeometrySignature::GeometrySignature(int genus, int anti_k) : curve_genus(genus), anti_k(anti_k) {
  if (genus < 0) {
    throw std::invalid_argument("signature: negative genus " + std::to_string(genus));
  }
  if (anti_k < 0) {
    throw std::invalid_argument("signature: anti_k must be >= 0, got " + std::to_string(anti_k));
  }
}

std::string to_string(CoverModel model) {
  return model == CoverModel::geometric ? "geometric" : "mtheory";
}

CoverModel parse_cover_model(std::string_view name) {
  if (name == "geometric") {
    return CoverModel::geometric;
  }
  if (name == "mtheory") {
    return CoverModel::mtheory;
  }
  throw std::invalid_argument("unknown cover model \"" + std::string(name) + "\"");
}

EvenSeries contribution_series(const GeometrySignature& sig, int order) {
  return int_pow(sine_ratio(order), sig.series_exponent());
}

Rational contribution_partition_sum(const GeometrySignature& sig, int h) {
  if (h < 0) {
    throw std::invalid_argument("contribution_partition_sum: negative h");
  }
  const Rational normal_degree(sig.normal_degree());
  Rational total;
  for (const Partition& tau : enumerate_partitions(h)) {
    Rational term = normal_degree.pow(tau.length()) / Rational(aut_order(tau));
    for (int part : tau.parts) {
      term *= alpha(part);
    }
    total += term;
  }
  return total;
}

ContributionValue contribution_degree(int genus, int h, long d, CoverModel model) {
  if (genus < 0 || h < 0) {
    throw std::invalid_argument("contribution_degree: genus and h must be >= 0");
  }
  if (d < 1) {
    throw std::invalid_argument("contribution_degree: degree must be positive, got " +
                                std::to_string(d));
  }
  const GeometrySignature sig(genus, 0);
  const Rational degree1 = contribution_series(sig, h)[static_cast<std::size_t>(h)];
  const Rational dd(d);

  if (model == CoverModel::mtheory) {
    return {dd.pow(2L * genus + 2L * h - 3) * degree1};
  }
  if (d == 1) {
    return {degree1};
  }
  if (genus == 0) {
    return {dd.pow(2L * h - 3) * degree1};
  }
  if (genus == 1) {
    return {h == 0 ? divisor_sum(d) / dd : Rational(0)};
  }
  return ContributionValue::undefined();
}

}  // namespace gwdeg
