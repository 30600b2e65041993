#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gwdeg/contributions.hpp"
#include "gwdeg/even_series.hpp"
#include "gwdeg/hodge.hpp"
#include "gwdeg/number_theory.hpp"
#include "gwdeg/tables.hpp"
#include "gwdeg/transforms.hpp"

using namespace gwdeg;

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

ClassTable random_table(std::mt19937_64& rng, int rank, int max_genus, const std::vector<int>& cutoffs,
                        std::optional<std::vector<int>> canonical = std::nullopt) {
  ClassTable table(rank, max_genus, cutoffs, canonical);
  std::uniform_int_distribution<int> value(-50, 50);
  std::bernoulli_distribution keep(0.4);
  for (const CurveClass& beta : table.classes_in_range()) {
    if (canonical && beta.pair(*canonical) < 0) {
      continue;
    }
    for (int g = 0; g <= max_genus; ++g) {
      if (keep(rng)) {
        table.set(g, beta, Rational(value(rng)));
      }
    }
  }
  return table;
}

bool partition_sum_matches_series() {
  for (int g = 0; g <= 10; ++g) {
    for (int k = 0; k <= 12; ++k) {
      const GeometrySignature sig(g, k);
      const EvenSeries series = contribution_series(sig, 12);
      for (int h = 0; h <= 12; ++h) {
        if (contribution_partition_sum(sig, h) != series[at(h)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool p3_coefficients() {
  for (int d = 1; d <= 10; ++d) {
    const EvenSeries s = contribution_series(GeometrySignature(0, 4 * d), 2);
    if (s[1] != Rational(1 - 2 * d, 12) || s[2] != Rational(3 - 11 * d + 10 * d * d, 720)) {
      return false;
    }
    if (contribution_series(GeometrySignature(1, 4 * d), 1)[1] != Rational(-4 * d, 24)) {
      return false;
    }
  }
  return true;
}

bool low_genus_covers() {
  for (long d = 1; d <= 20; ++d) {
    if (*contribution_degree(0, 0, d, CoverModel::geometric).value != Rational(1, d * d * d)) {
      return false;
    }
    Rational sigma;
    for (long e = 1; e <= d; ++e) {
      if (d % e == 0) {
        sigma += Rational(e);
      }
    }
    if (*contribution_degree(1, 0, d, CoverModel::geometric).value != sigma / Rational(d)) {
      return false;
    }
    for (int h = 1; h <= 5; ++h) {
      if (!contribution_degree(1, h, d, CoverModel::geometric).value->is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool faber_ratio() {
  for (int q = 2; q <= 20; ++q) {
    if (alpha(q) / kappa_integral(q) != Rational(Integer(1) << (q - 1), factorial(q))) {
      return false;
    }
  }
  return true;
}

bool alpha_log_exp() {
  const EvenSeries q = log(inverse(sine_ratio(20)));
  if (!q[0].is_zero()) {
    return false;
  }
  for (int k = 1; k <= 20; ++k) {
    // |B_2k| / (2k (2k)!)
    const Rational closed = bernoulli(2 * k).abs() / (Rational(2 * k) * Rational(factorial(2 * k)));
    if (q[at(k)] != closed) {
      return false;
    }
  }
  return exp(Rational(2) * q) == int_pow(sine_ratio(20), -2);
}

bool psi_lambda_specialization() {
  if (psi_lambda_integral(1, 0) != Rational(1, 24) || psi_lambda_integral(1, 1) != Rational(1, 24)) {
    return false;
  }
  const auto table = psi_lambda_table(8);
  for (int k = 0; k <= 3; ++k) {
    const EvenSeries target = int_pow(sine_ratio(8), -k - 1);
    for (int h = 1; h <= 8; ++h) {
      Rational poly;
      for (int i = 0; i <= h; ++i) {
        poly += Rational(k).pow(i) * table[at(h - 1)][at(i)];
      }
      if (poly != target[at(h)]) {
        return false;
      }
    }
  }
  return true;
}

bool gv_round_trip() {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 1 + trial % 2;
    const std::vector<int> cutoffs = rank == 1 ? std::vector<int>{8} : std::vector<int>{4, 4};
    const BPSTable bps(random_table(rng, rank, 4, cutoffs));
    const BPSTable back = gv_invert(gv_forward(bps, 4, cutoffs));
    if (!(back == bps) || !back.integrality_report.empty()) {
      return false;
    }
  }
  GWTable single(1, 0, {2});
  single.set(0, CurveClass{{1}}, Rational(1));
  const BPSTable flagged = gv_invert(single);
  return flagged.at(0, CurveClass{{2}}) == Rational(-1, 8) && flagged.integrality_report.size() == 1 &&
         flagged.integrality_report[0] == TableKey{0, CurveClass{{2}}};
}

bool enumerative_round_trip() {
  std::mt19937_64 rng(20260102);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 1 + trial % 2;
    const std::vector<int> cutoffs = rank == 1 ? std::vector<int>{8} : std::vector<int>{4, 4};
    const std::vector<int> canonical = rank == 1 ? std::vector<int>{trial % 5} : std::vector<int>{trial % 3, 1};
    const ETable e(random_table(rng, rank, 4, cutoffs, canonical));
    if (!(enumerative_solve(enumerative_forward(e, canonical)) == e)) {
      return false;
    }
  }
  ETable e(1, 1, {1});
  e.set(0, CurveClass{{1}}, Rational(1));
  return enumerative_forward(e, {0}).at(1, CurveClass{{1}}) == Rational(1, 12);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"partition sum equals S^{2g-2+k} (g<=10, k<=12, h<=12)", partition_sum_matches_series},
      {"P^3 coefficients (d=1..10)", p3_coefficients},
      {"C_0(0,d)=1/d^3, C_1(0,d)=sigma(d)/d, C_1(h>0,d)=0 (d<=20, h<=5)", low_genus_covers},
      {"alpha_q / kappa integral = 2^{q-1}/q! (q=2..20)", faber_ratio},
      {"alpha_q equals log coefficients, exp(2Q)=S^-2 (q<=20)", alpha_log_exp},
      {"psi-lambda polynomial specializes to S^{-k-1} (k<=3, h<=8)", psi_lambda_specialization},
      {"GV round trip on 100 random tables, -1/8 flagged", gv_round_trip},
      {"enumerative round trip on 100 random tables, coefficient 1/12", enumerative_round_trip},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      std::printf("  exception: %s\n", e.what());
    }
    std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", index++, name.c_str());
    failures += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
