#include <random>
#include <stdexcept>

#include <doctest.h>

#include "gwdeg/transforms.hpp"
#include "gwdeg/verify.hpp"

using gwdeg::BPSTable;
using gwdeg::ClassTable;
using gwdeg::CoverModel;
using gwdeg::CurveClass;
using gwdeg::ETable;
using gwdeg::EvenSeries;
using gwdeg::GWTable;
using gwdeg::Rational;

namespace {

CurveClass deg(int d) { return CurveClass{{d}}; }

// Rank-1 expansion of sum_d (1/d) (sin(dt/2)/(t/2))^{2g-2} q^{d beta}
// through scale_variable, independent of contribution_degree.
Rational gv_oracle(const BPSTable& bps, int target_genus, int degree) {
  Rational total;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d != 0) {
      continue;
    }
    for (int g = 0; g <= target_genus; ++g) {
      const Rational n = bps.at(g, deg(degree / d));
      if (n.is_zero()) {
        continue;
      }
      // (sin(dt/2)/(t/2))^{2g-2} = d^{2g-2} S(dt)^{2g-2}
      const EvenSeries scaled =
          gwdeg::scale_variable(gwdeg::int_pow(gwdeg::sine_ratio(target_genus), 2L * g - 2), d);
      total += n * Rational(d).pow(2L * g - 3) * scaled[static_cast<std::size_t>(target_genus - g)];
    }
  }
  return total;
}

}  // namespace

TEST_CASE("gv_forward reproduces multiple cover formulas") {
  BPSTable rational_curve(ClassTable(1, 1, {5}));
  rational_curve.set(0, deg(1), Rational(1));
  const GWTable gw = gwdeg::gv_forward(rational_curve, 1, {5});
  for (int d = 1; d <= 5; ++d) {
    CHECK(gw.at(0, deg(d)) == Rational(1, d * d * d));
    CHECK(gw.at(1, deg(d)) == Rational(1, 12 * d));
  }

  BPSTable elliptic(ClassTable(1, 1, {5}));
  elliptic.set(1, deg(1), Rational(1));
  const GWTable gw1 = gwdeg::gv_forward(elliptic, 1, {5});
  for (int d = 1; d <= 5; ++d) {
    CHECK(gw1.at(1, deg(d)) == Rational(1, d));
    CHECK(gw1.at(0, deg(d)).is_zero());
  }
}

TEST_CASE("gv_forward agrees with the direct series expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const BPSTable bps(gwdeg::random_integer_table(rng, 1, 3, {8}));
    const GWTable gw = gwdeg::gv_forward(bps, 3, {8});
    for (int g = 0; g <= 3; ++g) {
      for (int d = 1; d <= 8; ++d) {
        CHECK(gw.at(g, deg(d)) == gv_oracle(bps, g, d));
      }
    }
  }
}

TEST_CASE("gv_invert hand-solved single entry") {
  GWTable gw(1, 0, {2});
  gw.set(0, deg(1), Rational(1));
  const BPSTable bps = gwdeg::gv_invert(gw);
  CHECK(bps.at(0, deg(1)) == Rational(1));
  CHECK(bps.at(0, deg(2)) == Rational(-1, 8));
  REQUIRE(bps.integrality_report.size() == 1);
  CHECK(bps.integrality_report[0] == gwdeg::TableKey{0, deg(2)});
}

TEST_CASE("gv_invert of the zero table is zero") {
  const GWTable gw(2, 3, {3, 3});
  const BPSTable bps = gwdeg::gv_invert(gw);
  CHECK(bps.entries().empty());
  CHECK(bps.integrality_report.empty());
}

TEST_CASE("gv round trip on random integer tables") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int rank = 1 + trial % 2;
    const std::vector<int> cutoffs = rank == 1 ? std::vector<int>{8} : std::vector<int>{4, 3};
    const BPSTable bps(gwdeg::random_integer_table(rng, rank, 4, cutoffs));
    const BPSTable back = gwdeg::gv_invert(gwdeg::gv_forward(bps, 4, cutoffs));
    CHECK(back == bps);
    CHECK(back.integrality_report.empty());
  }
}

TEST_CASE("gv forward only couples divisor chains upward in genus") {
  const std::vector<int> cutoffs{4, 4};
  const ClassTable box(2, 3, cutoffs);
  for (const CurveClass& base : box.classes_in_range()) {
    for (int g = 0; g <= 3; ++g) {
      BPSTable bps(box);
      bps.set(g, base, Rational(1));
      const GWTable gw = gwdeg::gv_forward(bps, 3, cutoffs);
      for (const auto& [key, value] : gw.entries()) {
        CHECK(key.genus >= g);
        const long content = key.curve.content();
        bool is_multiple = false;
        for (long d = 1; d <= content; ++d) {
          is_multiple = is_multiple || (content % d == 0 && key.curve.divided_by(d) == base);
        }
        CHECK(is_multiple);
      }
    }
  }
}

TEST_CASE("gv error paths") {
  BPSTable bps(ClassTable(1, 2, {4}));
  bps.set(2, deg(4), Rational(1));
  CHECK_THROWS_AS(gwdeg::gv_forward(bps, 2, {4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(gwdeg::gv_forward(bps, 1, {4}), std::invalid_argument);
  CHECK_THROWS_AS(gwdeg::gv_forward(bps, 2, {3}), std::invalid_argument);

  // C_2(0,2) is not defined geometrically
  BPSTable genus2(ClassTable(1, 2, {2}));
  genus2.set(2, deg(1), Rational(1));
  CHECK_THROWS_AS(gwdeg::gv_forward(genus2, 2, {2}, CoverModel::geometric), std::domain_error);
}

TEST_CASE("geometric model round trip through genus one") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const BPSTable table(gwdeg::random_integer_table(rng, 1, 1, {10}));
    const GWTable gw = gwdeg::gv_forward(table, 1, {10}, CoverModel::geometric);
    CHECK(gwdeg::gv_invert(gw, CoverModel::geometric) == table);
  }
  // one elliptic curve: N^1_d = sigma(d)/d geometrically, 1/d in the M-theory form
  BPSTable elliptic(ClassTable(1, 1, {6}));
  elliptic.set(1, deg(1), Rational(1));
  const GWTable geo = gwdeg::gv_forward(elliptic, 1, {6}, CoverModel::geometric);
  CHECK(geo.at(1, deg(6)) == Rational(2));
  const BPSTable seen_by_mtheory = gwdeg::gv_invert(geo, CoverModel::mtheory);
  CHECK(seen_by_mtheory.at(1, deg(2)) == Rational(1));
  CHECK_FALSE(seen_by_mtheory == elliptic);
}

TEST_CASE("enumerative_forward reproduces the P^3 relations") {
  for (int d = 1; d <= 6; ++d) {
    ETable e(1, 2, {6});
    e.set(0, deg(d), Rational(1));
    GWTable gw = gwdeg::enumerative_forward(e, {4});
    CHECK(gw.at(0, deg(d)) == Rational(1));
    CHECK(gw.at(1, deg(d)) == Rational(1 - 2 * d, 12));
    CHECK(gw.at(2, deg(d)) == Rational(3 - 11 * d + 10 * d * d, 720));

    ETable e1(1, 2, {6});
    e1.set(1, deg(d), Rational(1));
    gw = gwdeg::enumerative_forward(e1, {4});
    CHECK(gw.at(1, deg(d)) == Rational(1));
    CHECK(gw.at(2, deg(d)) == Rational(-4 * d, 24));
  }
}

TEST_CASE("enumerative system at anti_k = 0 uses the Calabi-Yau coefficients") {
  ETable e(1, 3, {2});
  e.set(0, deg(2), Rational(1));
  const GWTable gw = gwdeg::enumerative_forward(e, {0});
  CHECK(gw.at(1, deg(2)) == Rational(1, 12));
  CHECK(gw.at(2, deg(2)) == Rational(1, 240));
  CHECK(gw.at(3, deg(2)) == Rational(1, 6048));
}

TEST_CASE("enumerative round trip and errors") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int rank = 1 + trial % 2;
    const std::vector<int> cutoffs = rank == 1 ? std::vector<int>{8} : std::vector<int>{3, 4};
    const std::vector<int> canonical = rank == 1 ? std::vector<int>{trial % 5} : std::vector<int>{2, trial % 3};
    const ETable e(gwdeg::random_integer_table(rng, rank, 4, cutoffs, canonical));
    CHECK(gwdeg::enumerative_solve(gwdeg::enumerative_forward(e, canonical)) == e);
  }

  GWTable no_canonical(1, 1, {3});
  CHECK_THROWS_AS(gwdeg::enumerative_solve(no_canonical), std::invalid_argument);

  ETable e(1, 1, {3});
  e.set(0, deg(2), Rational(1));
  CHECK_THROWS_AS(gwdeg::enumerative_forward(e, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(gwdeg::enumerative_forward(e, {1, 1}), std::invalid_argument);
}
