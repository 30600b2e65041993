#include "gwdeg/transforms.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gwdeg {

namespace {

// Memoized contribution_degree lookups for one solve.
class CoverCoefficients {
public:
  explicit CoverCoefficients(CoverModel model) : model_(model) {}

  // Coefficient of n^g_{beta'} in N^{g+h}_{d beta'}.
  const Rational& operator()(int g, int h, long d) {
    auto key = std::make_tuple(g, h, d);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      ContributionValue c = contribution_degree(g, h, d, model_);
      if (!c.defined()) {
        throw std::domain_error("cover coefficient C_" + std::to_string(g) + "(" +
                                std::to_string(h) + "," + std::to_string(d) +
                                ") is undefined in the " + to_string(model_) + " model");
      }
      it = cache_.emplace(key, *c.value).first;
    }
    return it->second;
  }

private:
  CoverModel model_;
  std::map<std::tuple<int, int, long>, Rational> cache_;
};

// Coefficients of S(t)^m through a fixed order, keyed by exponent.
class PowerSeriesCache {
public:
  explicit PowerSeriesCache(int order) : sine_(sine_ratio(order)) {}

  const EvenSeries& power(long exponent) {
    auto it = cache_.find(exponent);
    if (it == cache_.end()) {
      it = cache_.emplace(exponent, int_pow(sine_, exponent)).first;
    }
    return it->second;
  }

private:
  EvenSeries sine_;
  std::map<long, EvenSeries> cache_;
};

void require_rank(const ClassTable& table, std::size_t rank, const char* what) {
  if (static_cast<std::size_t>(table.rank()) != rank) {
    throw std::invalid_argument(std::string("rank mismatch: table has rank ") +
                                std::to_string(table.rank()) + " but " + what + " has " +
                                std::to_string(rank) + " entries");
  }
}

}  // namespace

GWTable gv_forward(const BPSTable& bps, int genus_cutoff, const std::vector<int>& degree_cutoffs,
                   CoverModel model) {
  bps.validate();
  require_rank(bps, degree_cutoffs.size(), "degree_cutoffs");
  GWTable gw(bps.rank(), genus_cutoff, degree_cutoffs, bps.canonical());

  for (const auto& [key, value] : bps.entries()) {
    if (key.genus > genus_cutoff || !gw.in_range(key.curve)) {
      throw std::invalid_argument("BPS entry " + describe(key) + " lies outside the cutoffs");
    }
  }

  CoverCoefficients coefficient(model);
  std::map<TableKey, Rational> acc;
  for (const auto& [key, n] : bps.entries()) {
    for (long d = 1;; ++d) {
      CurveClass target = key.curve.times(d);
      if (!gw.in_range(target)) {
        break;
      }
      for (int target_genus = key.genus; target_genus <= genus_cutoff; ++target_genus) {
        acc[TableKey{target_genus, target}] += coefficient(key.genus, target_genus - key.genus, d) * n;
      }
    }
  }
  for (const auto& [key, value] : acc) {
    gw.set(key.genus, key.curve, value);
  }
  return gw;
}

BPSTable gv_invert(const GWTable& gw, CoverModel model) {
  gw.validate();
  BPSTable bps(gw.rank(), gw.max_genus(), gw.degree_cutoffs(), gw.canonical());
  CoverCoefficients coefficient(model);

  // Divisors of beta are strictly smaller in total degree, and the d = 1
  // terms only reach lower genus, so this order sees every dependency first.
  for (const CurveClass& beta : gw.classes_in_range()) {
    const long content = beta.content();
    for (int target_genus = 0; target_genus <= gw.max_genus(); ++target_genus) {
      Rational n = gw.at(target_genus, beta);
      for (long d = 1; d <= content; ++d) {
        if (content % d != 0) {
          continue;
        }
        const CurveClass base = beta.divided_by(d);
        for (int g = 0; g <= target_genus; ++g) {
          if (d == 1 && g == target_genus) {
            continue;  // diagonal, coefficient C_g(0,1) = 1
          }
          const Rational lower = bps.at(g, base);
          if (!lower.is_zero()) {
            n -= coefficient(g, target_genus - g, d) * lower;
          }
        }
      }
      bps.set(target_genus, beta, n);
    }
  }
  bps.refresh_integrality();
  return bps;
}

GWTable enumerative_forward(const ETable& e, const std::vector<int>& canonical) {
  e.validate();
  require_rank(e, canonical.size(), "canonical");
  for (const auto& [key, value] : e.entries()) {
    if (key.curve.pair(canonical) < 0) {
      throw std::invalid_argument("entry " + describe(key) + " has negative canonical pairing");
    }
  }
  GWTable gw(e.rank(), e.max_genus(), e.degree_cutoffs(), canonical);
  PowerSeriesCache powers(e.max_genus());

  std::map<TableKey, Rational> acc;
  for (const auto& [key, value] : e.entries()) {
    const GeometrySignature sig(key.genus, static_cast<int>(key.curve.pair(canonical)));
    const EvenSeries& series = powers.power(sig.series_exponent());
    for (int target_genus = key.genus; target_genus <= e.max_genus(); ++target_genus) {
      acc[TableKey{target_genus, key.curve}] +=
          series[static_cast<std::size_t>(target_genus - key.genus)] * value;
    }
  }
  for (const auto& [key, value] : acc) {
    gw.set(key.genus, key.curve, value);
  }
  return gw;
}

ETable enumerative_solve(const GWTable& gw) {
  gw.validate();
  if (!gw.canonical()) {
    throw std::invalid_argument("enumerative solve needs the table's canonical vector");
  }
  const std::vector<int>& canonical = *gw.canonical();
  ETable e(gw.rank(), gw.max_genus(), gw.degree_cutoffs(), canonical);
  PowerSeriesCache powers(gw.max_genus());

  std::set<CurveClass> classes;
  for (const auto& [key, value] : gw.entries()) {
    classes.insert(key.curve);
  }
  for (const CurveClass& beta : classes) {
    const int anti_k = static_cast<int>(beta.pair(canonical));
    for (int target_genus = 0; target_genus <= gw.max_genus(); ++target_genus) {
      Rational value = gw.at(target_genus, beta);
      for (int g = 0; g < target_genus; ++g) {
        const Rational lower = e.at(g, beta);
        if (!lower.is_zero()) {
          const EvenSeries& series = powers.power(GeometrySignature(g, anti_k).series_exponent());
          value -= series[static_cast<std::size_t>(target_genus - g)] * lower;
        }
      }
      e.set(target_genus, beta, value);
    }
  }
  return e;
}

}  // namespace gwdeg
