#include "gwdeg/tables.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace gwdeg {

using nlohmann::json;

long CurveClass::total_degree() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0L);
}

bool CurveClass::is_zero() const {
  return std::all_of(degrees.begin(), degrees.end(), [](int b) { return b == 0; });
}

long CurveClass::content() const {
  long g = 0;
  for (int b : degrees) {
    g = std::gcd(g, static_cast<long>(b));
  }
  return g;
}

CurveClass CurveClass::divided_by(long d) const {
  if (d < 1) {
    throw std::invalid_argument("curve class: divisor must be positive");
  }
  CurveClass out;
  out.degrees.reserve(degrees.size());
  for (int b : degrees) {
    if (b % d != 0) {
      throw std::invalid_argument("curve class " + to_string() + " is not divisible by " +
                                  std::to_string(d));
    }
    out.degrees.push_back(static_cast<int>(b / d));
  }
  return out;
}

CurveClass CurveClass::times(long d) const {
  CurveClass out;
  out.degrees.reserve(degrees.size());
  for (int b : degrees) {
    out.degrees.push_back(static_cast<int>(b * d));
  }
  return out;
}

long CurveClass::pair(const std::vector<int>& canonical) const {
  if (canonical.size() != degrees.size()) {
    throw std::invalid_argument("canonical vector rank " + std::to_string(canonical.size()) +
                                " does not match class rank " + std::to_string(degrees.size()));
  }
  return std::inner_product(degrees.begin(), degrees.end(), canonical.begin(), 0L);
}

std::string CurveClass::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    os << (i ? "," : "") << degrees[i];
  }
  os << ']';
  return os.str();
}

std::string describe(const TableKey& key) {
  return "(genus " + std::to_string(key.genus) + ", class " + key.curve.to_string() + ")";
}

ClassTable::ClassTable(int rank, int max_genus, std::vector<int> degree_cutoffs,
                       std::optional<std::vector<int>> canonical)
    : rank_(rank),
      max_genus_(max_genus),
      degree_cutoffs_(std::move(degree_cutoffs)),
      canonical_(std::move(canonical)) {
  validate();
}

void ClassTable::set_canonical(std::optional<std::vector<int>> canonical) {
  canonical_ = std::move(canonical);
  validate();
}

Rational ClassTable::at(int genus, const CurveClass& curve) const {
  auto it = entries_.find(TableKey{genus, curve});
  return it == entries_.end() ? Rational(0) : it->second;
}

void ClassTable::set(int genus, const CurveClass& curve, const Rational& value) {
  check_key(genus, curve);
  TableKey key{genus, curve};
  if (value.is_zero()) {
    entries_.erase(key);
  } else {
    entries_[std::move(key)] = value;
  }
}

bool ClassTable::in_range(const CurveClass& curve) const {
  if (curve.rank() != rank_ || curve.is_zero()) {
    return false;
  }
  for (int i = 0; i < rank_; ++i) {
    const int b = curve.degrees[static_cast<std::size_t>(i)];
    if (b < 0 || b > degree_cutoffs_[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

std::vector<CurveClass> ClassTable::classes_in_range() const {
  std::vector<CurveClass> out;
  CurveClass current{std::vector<int>(static_cast<std::size_t>(rank_), 0)};
  // odometer over the degree box
  while (true) {
    std::size_t i = 0;
    while (i < current.degrees.size() && current.degrees[i] == degree_cutoffs_[i]) {
      current.degrees[i] = 0;
      ++i;
    }
    if (i == current.degrees.size()) {
      break;
    }
    ++current.degrees[i];
    out.push_back(current);
  }
  std::sort(out.begin(), out.end(), [](const CurveClass& a, const CurveClass& b) {
    const long da = a.total_degree();
    const long db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  return out;
}

void ClassTable::check_key(int genus, const CurveClass& curve) const {
  const std::string where = describe(TableKey{genus, curve});
  if (genus < 0 || genus > max_genus_) {
    throw TableError(where + ": genus outside 0.." + std::to_string(max_genus_));
  }
  if (curve.rank() != rank_) {
    throw TableError(where + ": class rank " + std::to_string(curve.rank()) +
                     " does not match table rank " + std::to_string(rank_));
  }
  if (curve.is_zero()) {
    throw TableError(where + ": the zero class is excluded");
  }
  if (!in_range(curve)) {
    throw TableError(where + ": class outside the degree cutoffs");
  }
  if (canonical_ && curve.pair(*canonical_) < 0) {
    throw TableError(where + ": canonical pairing is negative");
  }
}

void ClassTable::validate() const {
  if (rank_ < 1) {
    throw TableError("rank must be >= 1, got " + std::to_string(rank_));
  }
  if (max_genus_ < 0) {
    throw TableError("max_genus must be >= 0, got " + std::to_string(max_genus_));
  }
  if (static_cast<int>(degree_cutoffs_.size()) != rank_) {
    throw TableError("degree_cutoffs has " + std::to_string(degree_cutoffs_.size()) +
                     " entries for rank " + std::to_string(rank_));
  }
  if (std::any_of(degree_cutoffs_.begin(), degree_cutoffs_.end(), [](int d) { return d < 0; })) {
    throw TableError("degree_cutoffs must be nonnegative");
  }
  if (canonical_ && static_cast<int>(canonical_->size()) != rank_) {
    throw TableError("canonical has " + std::to_string(canonical_->size()) +
                     " entries for rank " + std::to_string(rank_));
  }
  for (const auto& [key, value] : entries_) {
    check_key(key.genus, key.curve);
  }
}

void BPSTable::refresh_integrality() {
  integrality_report.clear();
  for (const auto& [key, value] : entries()) {
    if (!value.is_integer()) {
      integrality_report.push_back(key);
    }
  }
}

namespace {

std::vector<int> int_vector(const json& node, const std::string& field) {
  if (!node.is_array()) {
    throw TableError(field + ": expected an array of integers");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number_integer()) {
      throw TableError(field + "[" + std::to_string(i) + "]: expected an integer");
    }
    out.push_back(node[i].get<int>());
  }
  return out;
}

int int_field(const json& doc, const std::string& field) {
  if (!doc.contains(field)) {
    throw TableError("missing field \"" + field + "\"");
  }
  if (!doc[field].is_number_integer()) {
    throw TableError(field + ": expected an integer");
  }
  return doc[field].get<int>();
}

json entry_json(const TableKey& key, const Rational& value) {
  return json{{"genus", key.genus}, {"class", key.curve.degrees}, {"value", value.to_string()}};
}

}  // namespace

ClassTable table_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw TableError("table must be a JSON object");
  }
  const int rank = int_field(doc, "rank");
  const int max_genus = int_field(doc, "max_genus");
  if (!doc.contains("degree_cutoffs")) {
    throw TableError("missing field \"degree_cutoffs\"");
  }
  std::vector<int> cutoffs = int_vector(doc["degree_cutoffs"], "degree_cutoffs");
  std::optional<std::vector<int>> canonical;
  if (doc.contains("canonical") && !doc["canonical"].is_null()) {
    canonical = int_vector(doc["canonical"], "canonical");
  }
  ClassTable table(rank, max_genus, std::move(cutoffs), std::move(canonical));

  if (!doc.contains("entries")) {
    return table;
  }
  const json& entries = doc["entries"];
  if (!entries.is_array()) {
    throw TableError("entries: expected an array");
  }
  std::map<TableKey, std::size_t> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const json& e = entries[i];
    if (!e.is_object() || !e.contains("genus") || !e.contains("class") || !e.contains("value")) {
      throw TableError(where + ": expected an object with genus, class and value");
    }
    if (!e["genus"].is_number_integer()) {
      throw TableError(where + ".genus: expected an integer");
    }
    if (!e["value"].is_string()) {
      throw TableError(where + ".value: expected a rational string such as \"-1/8\"");
    }
    TableKey key{e["genus"].get<int>(), CurveClass{int_vector(e["class"], where + ".class")}};
    Rational value;
    try {
      value = Rational::parse(e["value"].get<std::string>());
    } catch (const std::exception& ex) {
      throw TableError(where + ".value: " + ex.what());
    }
    if (auto [it, inserted] = seen.emplace(key, i); !inserted) {
      throw TableError(where + ": duplicate key " + describe(key) + " (first at entries[" +
                       std::to_string(it->second) + "])");
    }
    try {
      table.set(key.genus, key.curve, value);
    } catch (const TableError& ex) {
      throw TableError(where + ": " + ex.what());
    }
  }
  return table;
}

json table_to_json(const ClassTable& table) {
  json doc;
  doc["rank"] = table.rank();
  doc["max_genus"] = table.max_genus();
  doc["degree_cutoffs"] = table.degree_cutoffs();
  if (table.canonical()) {
    doc["canonical"] = *table.canonical();
  }
  json entries = json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back(entry_json(key, value));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

json table_to_json(const BPSTable& table) {
  json doc = table_to_json(static_cast<const ClassTable&>(table));
  json report = json::array();
  for (const TableKey& key : table.integrality_report) {
    report.push_back(entry_json(key, table.at(key.genus, key.curve)));
  }
  doc["integrality_report"] = std::move(report);
  return doc;
}

ClassTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw TableError(path.string() + ": cannot open file");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& ex) {
    throw TableError(path.string() + ": malformed JSON: " + ex.what());
  }
  try {
    return table_from_json(doc);
  } catch (const TableError& ex) {
    throw TableError(path.string() + ": " + ex.what());
  }
}

}  // namespace gwdeg
