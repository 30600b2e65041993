#ifndef GWDEG_TABLES_HPP
#define GWDEG_TABLES_HPP

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwdeg/rational.hpp"

namespace gwdeg {

/// Curve class beta in H_2(X, Z), as coordinates in a fixed basis.
struct CurveClass {
  std::vector<int> degrees;

  int rank() const { return static_cast<int>(degrees.size()); }
  long total_degree() const;
  bool is_zero() const;
  /// gcd of the coordinates; beta = d * beta' exactly when d divides this.
  long content() const;
  /// beta / d. Throws std::invalid_argument unless d divides every coordinate.
  CurveClass divided_by(long d) const;
  CurveClass times(long d) const;
  /// c . beta
  long pair(const std::vector<int>& canonical) const;

  std::string to_string() const;

  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

struct TableKey {
  int genus = 0;
  CurveClass curve;

  friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

std::string describe(const TableKey& key);

/// Raised for structurally invalid tables; the message names the offending
/// entry.
class TableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finitely supported map (genus, curve class) -> Rational over the box
/// 0 <= genus <= max_genus, 0 <= beta_i <= degree_cutoffs[i], beta != 0.
/// Missing entries are zero; zero values are never stored.
class ClassTable {
public:
  ClassTable() = default;
  ClassTable(int rank, int max_genus, std::vector<int> degree_cutoffs,
             std::optional<std::vector<int>> canonical = std::nullopt);

  int rank() const { return rank_; }
  int max_genus() const { return max_genus_; }
  const std::vector<int>& degree_cutoffs() const { return degree_cutoffs_; }
  const std::optional<std::vector<int>>& canonical() const { return canonical_; }
  void set_canonical(std::optional<std::vector<int>> canonical);
  const std::map<TableKey, Rational>& entries() const { return entries_; }

  Rational at(int genus, const CurveClass& curve) const;
  /// Stores `value`, erasing the key when it is zero. The key must satisfy
  /// the table's bounds.
  void set(int genus, const CurveClass& curve, const Rational& value);

  bool in_range(const CurveClass& curve) const;
  /// Every nonzero class in the degree box, by total degree then
  /// lexicographically.
  std::vector<CurveClass> classes_in_range() const;

  /// Throws TableError if the header or any entry breaks the invariants.
  void validate() const;

  friend bool operator==(const ClassTable&, const ClassTable&) = default;

private:
  void check_key(int genus, const CurveClass& curve) const;

  int rank_ = 1;
  int max_genus_ = 0;
  std::vector<int> degree_cutoffs_{0};
  std::optional<std::vector<int>> canonical_;
  std::map<TableKey, Rational> entries_;
};

/// Gromov-Witten invariants N^g_beta.
struct GWTable : ClassTable {
  using ClassTable::ClassTable;
  explicit GWTable(ClassTable base) : ClassTable(std::move(base)) {}
};

/// Enumerative invariants E^g_beta.
struct ETable : ClassTable {
  using ClassTable::ClassTable;
  explicit ETable(ClassTable base) : ClassTable(std::move(base)) {}
};

/// BPS invariants n^g_beta together with the keys whose value is not an
/// integer.
struct BPSTable : ClassTable {
  using ClassTable::ClassTable;
  explicit BPSTable(ClassTable base) : ClassTable(std::move(base)) { refresh_integrality(); }

  std::vector<TableKey> integrality_report;

  void refresh_integrality();
};

/// Parses the JSON table format. Throws TableError naming the offending
/// field or entry.
ClassTable table_from_json(const nlohmann::json& doc);
nlohmann::json table_to_json(const ClassTable& table);
nlohmann::json table_to_json(const BPSTable& table);

/// Reads and parses a table file. Throws TableError (prefixed with the path)
/// for unreadable files, malformed JSON, or invalid content.
ClassTable load_table(const std::filesystem::path& path);

}  // namespace gwdeg

#endif  // GWDEG_TABLES_HPP
