#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>

#include "gwdeg/tables.hpp"
#include "gwdeg/verify.hpp"

using gwdeg::ClassTable;
using gwdeg::CurveClass;
using gwdeg::Rational;
using gwdeg::TableError;
using nlohmann::json;

namespace {

json sample_doc() {
  return json::parse(R"({
    "rank": 2,
    "canonical": [1, 2],
    "max_genus": 1,
    "degree_cutoffs": [2, 3],
    "entries": [
      {"genus": 0, "class": [1, 0], "value": "5"},
      {"genus": 1, "class": [2, 2], "value": "-4/6"},
      {"genus": 0, "class": [0, 1], "value": "0"}
    ]
  })");
}

std::string error_of(const json& doc) {
  try {
    gwdeg::table_from_json(doc);
  } catch (const TableError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("curve class helpers") {
  const CurveClass beta{{4, 6}};
  CHECK(beta.content() == 2);
  CHECK(beta.total_degree() == 10);
  CHECK(beta.divided_by(2) == CurveClass{{2, 3}});
  CHECK(CurveClass{{2, 3}}.times(3) == CurveClass{{6, 9}});
  CHECK(beta.pair({1, -1}) == -2);
  CHECK(beta.to_string() == "[4,6]");
  CHECK_THROWS_AS(beta.divided_by(4), std::invalid_argument);
  CHECK_THROWS_AS(beta.pair({1}), std::invalid_argument);
  CHECK(CurveClass{{0, 0}}.is_zero());
}

TEST_CASE("classes_in_range orders by total degree") {
  const ClassTable table(2, 0, {1, 2});
  const std::vector<CurveClass> want{{{0, 1}}, {{1, 0}}, {{0, 2}}, {{1, 1}}, {{1, 2}}};
  CHECK(table.classes_in_range() == want);
}

TEST_CASE("load a table from JSON") {
  const ClassTable table = gwdeg::table_from_json(sample_doc());
  CHECK(table.rank() == 2);
  CHECK(table.max_genus() == 1);
  CHECK(table.canonical() == std::vector<int>{1, 2});
  CHECK(table.entries().size() == 2);  // zero value dropped
  CHECK(table.at(1, CurveClass{{2, 2}}) == Rational(-2, 3));
  CHECK(table.at(1, CurveClass{{1, 1}}).is_zero());

  const json out = gwdeg::table_to_json(table);
  CHECK(out["entries"][1]["value"] == "-2/3");
  CHECK(gwdeg::table_from_json(out) == table);
}

TEST_CASE("load errors name the offending entry") {
  json doc = sample_doc();
  doc["entries"].push_back({{"genus", 0}, {"class", {1, 0}}, {"value", "1"}});
  CHECK(error_of(doc).find("entries[3]: duplicate key (genus 0, class [1,0])") != std::string::npos);

  doc = sample_doc();
  doc["entries"][1]["class"] = {3, 0};
  CHECK(error_of(doc).find("entries[1]") != std::string::npos);
  CHECK(error_of(doc).find("outside the degree cutoffs") != std::string::npos);

  doc = sample_doc();
  doc["entries"][0]["class"] = {0, 0};
  CHECK(error_of(doc).find("zero class") != std::string::npos);

  doc = sample_doc();
  doc["entries"][0]["class"] = {1};
  CHECK(error_of(doc).find("rank") != std::string::npos);

  doc = sample_doc();
  doc["entries"][0]["value"] = "1/0";
  CHECK(error_of(doc).find("entries[0].value") != std::string::npos);

  doc = sample_doc();
  doc["entries"][0]["value"] = 3;
  CHECK(error_of(doc).find("entries[0].value") != std::string::npos);

  doc = sample_doc();
  doc["entries"][0]["genus"] = 2;
  CHECK(error_of(doc).find("genus outside") != std::string::npos);

  doc = sample_doc();
  doc["canonical"] = {1, -1};
  doc["entries"][0]["class"] = {0, 1};
  CHECK(error_of(doc).find("canonical pairing is negative") != std::string::npos);

  doc = sample_doc();
  doc["degree_cutoffs"] = {2};
  CHECK(error_of(doc).find("degree_cutoffs") != std::string::npos);

  doc = sample_doc();
  doc.erase("max_genus");
  CHECK(error_of(doc).find("max_genus") != std::string::npos);
}

TEST_CASE("load_table reports file problems with the path") {
  const auto dir = std::filesystem::temp_directory_path() / "gwdeg_table_tests";
  std::filesystem::create_directories(dir);

  CHECK_THROWS_WITH_AS(gwdeg::load_table(dir / "missing.json"),
                       doctest::Contains("cannot open file"), TableError);

  const auto bad = dir / "bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK_THROWS_WITH_AS(gwdeg::load_table(bad), doctest::Contains("malformed JSON"), TableError);

  const auto good = dir / "good.json";
  std::ofstream(good) << sample_doc().dump();
  CHECK(gwdeg::load_table(good) == gwdeg::table_from_json(sample_doc()));
}

TEST_CASE("JSON serialization round-trips random tables") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int rank = 1 + trial % 3;
    const ClassTable table = gwdeg::random_integer_table(rng, rank, 2, std::vector<int>(rank, 3));
    const json doc = gwdeg::table_to_json(table);
    CHECK(gwdeg::table_from_json(json::parse(doc.dump())) == table);
    CHECK(gwdeg::table_to_json(gwdeg::table_from_json(doc)).dump() == doc.dump());
  }
}

TEST_CASE("BPS tables report non-integral entries") {
  ClassTable base(1, 0, {3});
  base.set(0, CurveClass{{1}}, Rational(2));
  base.set(0, CurveClass{{2}}, Rational(-1, 8));
  const gwdeg::BPSTable bps(base);
  REQUIRE(bps.integrality_report.size() == 1);
  CHECK(bps.integrality_report[0] == gwdeg::TableKey{0, CurveClass{{2}}});
  const json doc = gwdeg::table_to_json(bps);
  CHECK(doc["integrality_report"][0]["value"] == "-1/8");
}
