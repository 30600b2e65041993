#include "gwdeg/verify.hpp"

#include <functional>
#include <sstream>

#include "gwdeg/contributions.hpp"
#include "gwdeg/hodge.hpp"
#include "gwdeg/number_theory.hpp"
#include "gwdeg/transforms.hpp"

namespace gwdeg {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

class SuiteRecorder {
public:
  explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe_case) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (result_.failures.size() < kMaxRecordedFailures) {
      result_.failures.push_back(describe_case());
    }
  }

  SuiteResult finish() { return std::move(result_); }

private:
  SuiteResult result_;
};

std::string mismatch(const std::string& what, const Rational& got, const Rational& want) {
  return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

SuiteResult series_vs_partition_sum() {
  SuiteRecorder suite("series-vs-partition-sum");
  constexpr int kMaxH = 12;
  for (int g = 0; g <= 10; ++g) {
    for (int k = 0; k <= 12; ++k) {
      const GeometrySignature sig(g, k);
      const EvenSeries series = contribution_series(sig, kMaxH);
      for (int h = 0; h <= kMaxH; ++h) {
        const Rational sum = contribution_partition_sum(sig, h);
        const Rational& coeff = series[static_cast<std::size_t>(h)];
        suite.check(sum == coeff, [&] {
          std::ostringstream os;
          os << "g=" << g << " k=" << k << " h=" << h;
          return mismatch(os.str(), sum, coeff);
        });
      }
    }
  }
  return suite.finish();
}

SuiteResult bernoulli_vs_log() {
  SuiteRecorder suite("bernoulli-vs-formal-log");
  constexpr int kOrder = 20;
  const EvenSeries q_series = alpha_via_log(kOrder);
  for (int q = 1; q <= kOrder; ++q) {
    const Rational closed = alpha(q);
    const Rational& via_log = q_series[static_cast<std::size_t>(q)];
    suite.check(closed == via_log,
                [&] { return mismatch("alpha(" + std::to_string(q) + ")", closed, via_log); });
  }
  const EvenSeries lhs = exp(Rational(2) * q_series);
  const EvenSeries rhs = int_pow(sine_ratio(kOrder), -2);
  suite.check(lhs == rhs, [] { return std::string("exp(2Q) != S^-2 through order 20"); });
  return suite.finish();
}

SuiteResult faber_ratio() {
  SuiteRecorder suite("faber-ratio");
  for (int q = 2; q <= 20; ++q) {
    const Rational ratio = faber_ratio_check(q);
    const Rational expected = faber_expected_ratio(q);
    suite.check(ratio == expected,
                [&] { return mismatch("q=" + std::to_string(q), ratio, expected); });
  }
  return suite.finish();
}

SuiteResult psi_lambda_specialization() {
  SuiteRecorder suite("psi-lambda-specialization");
  constexpr int kMaxH = 8;
  const auto table = psi_lambda_table(kMaxH);
  const EvenSeries sine = sine_ratio(kMaxH);
  for (int k = 0; k <= 3; ++k) {
    const EvenSeries target = int_pow(sine, -k - 1);
    for (int h = 1; h <= kMaxH; ++h) {
      Rational poly;
      for (int i = 0; i <= h; ++i) {
        poly += Rational(k).pow(i) * table[static_cast<std::size_t>(h - 1)][static_cast<std::size_t>(i)];
      }
      const Rational& want = target[static_cast<std::size_t>(h)];
      suite.check(poly == want, [&] {
        return mismatch("k=" + std::to_string(k) + " h=" + std::to_string(h), poly, want);
      });
    }
  }
  return suite.finish();
}

SuiteResult projective_space_coefficients() {
  SuiteRecorder suite("p3-coefficients");
  for (int d = 1; d <= 10; ++d) {
    const EvenSeries genus0 = contribution_series(GeometrySignature(0, 4 * d), 2);
    const EvenSeries genus1 = contribution_series(GeometrySignature(1, 4 * d), 1);
    const Rational want01(1 - 2 * d, 12);
    const Rational want02(3 - 11 * d + 10 * d * d, 720);
    const Rational want11(-d, 6);
    const std::string tag = "d=" + std::to_string(d);
    suite.check(genus0[1] == want01, [&] { return mismatch("C_0(1) " + tag, genus0[1], want01); });
    suite.check(genus0[2] == want02, [&] { return mismatch("C_0(2) " + tag, genus0[2], want02); });
    suite.check(genus1[1] == want11, [&] { return mismatch("C_1(1) " + tag, genus1[1], want11); });
  }
  return suite.finish();
}

SuiteResult low_genus_cover_values() {
  SuiteRecorder suite("low-genus-cover-values");
  for (long d = 1; d <= 20; ++d) {
    const Rational dd(d);
    const auto c00 = contribution_degree(0, 0, d, CoverModel::geometric);
    suite.check(c00.defined() && *c00.value == dd.pow(-3),
                [&] { return "C_0(0," + std::to_string(d) + ") != 1/d^3"; });
    const auto c10 = contribution_degree(1, 0, d, CoverModel::geometric);
    suite.check(c10.defined() && *c10.value == divisor_sum(d) / dd,
                [&] { return "C_1(0," + std::to_string(d) + ") != sigma(d)/d"; });
    for (int h = 1; h <= 5; ++h) {
      const auto c1h = contribution_degree(1, h, d, CoverModel::geometric);
      suite.check(c1h.defined() && c1h.value->is_zero(), [&] {
        return "C_1(" + std::to_string(h) + "," + std::to_string(d) + ") != 0";
      });
    }
  }
  return suite.finish();
}

std::vector<int> random_cutoffs(std::mt19937_64& rng, int rank) {
  if (rank == 1) {
    return {std::uniform_int_distribution<int>(1, 8)(rng)};
  }
  std::uniform_int_distribution<int> pick(1, 4);
  return {pick(rng), pick(rng)};
}

SuiteResult gv_round_trip(const VerifyOptions& options) {
  SuiteRecorder suite("gv-round-trip");
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < options.random_tables; ++trial) {
    const int rank = std::uniform_int_distribution<int>(1, 2)(rng);
    const int max_genus = std::uniform_int_distribution<int>(0, 4)(rng);
    const BPSTable bps(random_integer_table(rng, rank, max_genus, random_cutoffs(rng, rank)));
    const GWTable gw = gv_forward(bps, bps.max_genus(), bps.degree_cutoffs());
    const BPSTable back = gv_invert(gw);
    suite.check(back == bps && back.integrality_report.empty(),
                [&] { return "trial " + std::to_string(trial) + " did not round-trip"; });
  }
  return suite.finish();
}

SuiteResult enumerative_round_trip(const VerifyOptions& options) {
  SuiteRecorder suite("enumerative-round-trip");
  std::mt19937_64 rng(options.seed + 1);
  std::uniform_int_distribution<int> canonical_entry(0, 4);
  for (int trial = 0; trial < options.random_tables; ++trial) {
    const int rank = std::uniform_int_distribution<int>(1, 2)(rng);
    const int max_genus = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<int> canonical;
    for (int i = 0; i < rank; ++i) {
      canonical.push_back(canonical_entry(rng));
    }
    const ETable e(random_integer_table(rng, rank, max_genus, random_cutoffs(rng, rank), canonical));
    const ETable back = enumerative_solve(enumerative_forward(e, canonical));
    suite.check(back == e, [&] { return "trial " + std::to_string(trial) + " did not round-trip"; });
  }
  return suite.finish();
}

}  // namespace

ClassTable random_integer_table(std::mt19937_64& rng, int rank, int max_genus,
                                const std::vector<int>& degree_cutoffs,
                                std::optional<std::vector<int>> canonical) {
  ClassTable table(rank, max_genus, degree_cutoffs, std::move(canonical));
  std::bernoulli_distribution keep(0.4);
  std::uniform_int_distribution<int> value(-50, 50);
  for (const CurveClass& beta : table.classes_in_range()) {
    for (int g = 0; g <= max_genus; ++g) {
      if (keep(rng)) {
        table.set(g, beta, Rational(value(rng)));
      }
    }
  }
  return table;
}

std::vector<SuiteResult> run_identity_suites(const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  out.push_back(series_vs_partition_sum());
  out.push_back(bernoulli_vs_log());
  out.push_back(faber_ratio());
  out.push_back(psi_lambda_specialization());
  out.push_back(projective_space_coefficients());
  out.push_back(low_genus_cover_values());
  out.push_back(gv_round_trip(options));
  out.push_back(enumerative_round_trip(options));
  return out;
}

}  // namespace gwdeg
