#include "gwdeg/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwdeg/contributions.hpp"
#include "gwdeg/hodge.hpp"
#include "gwdeg/tables.hpp"
#include "gwdeg/transforms.hpp"
#include "gwdeg/verify.hpp"

namespace gwdeg::cli {

namespace {

using nlohmann::json;

// Flag combinations CLI11 cannot express on its own.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct OutputOptions {
  Format format = Format::json;
  std::optional<int> decimal;
};

struct Cell {
  json value;
  std::optional<Rational> rational;
};

Cell cell(const Rational& r) { return {r.to_string(), r}; }
Cell cell(int v) { return {v, std::nullopt}; }
Cell cell(bool v) { return {v, std::nullopt}; }
Cell cell(std::string v) { return {std::move(v), std::nullopt}; }
Cell null_cell() { return {nullptr, std::nullopt}; }

std::string csv_text(const json& v) {
  if (v.is_null()) {
    return "";
  }
  if (v.is_string()) {
    return v.get<std::string>();
  }
  return v.dump();
}

// A flat result: named columns, one row per record. Rational cells gain a
// "<column>_approx" companion when --decimal is set.
struct RowSet {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write(std::ostream& out, const OutputOptions& opts, json header = json::object(),
             const std::string& rows_key = "rows") const {
    if (opts.format == Format::csv) {
      write_csv(out, opts);
      return;
    }
    json array = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < columns.size(); ++c) {
        obj[columns[c]] = row[c].value;
        if (opts.decimal && row[c].rational) {
          obj[columns[c] + "_approx"] = row[c].rational->to_decimal(*opts.decimal);
        }
      }
      array.push_back(std::move(obj));
    }
    header[rows_key] = std::move(array);
    if (opts.decimal) {
      header["approx_digits"] = *opts.decimal;
    }
    out << header.dump(2) << '\n';
  }

private:
  void write_csv(std::ostream& out, const OutputOptions& opts) const {
    std::vector<bool> approx(columns.size(), false);
    if (opts.decimal) {
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
          approx[c] = approx[c] || row[c].rational.has_value();
        }
      }
    }
    std::string line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line += (c ? "," : "") + columns[c];
      if (approx[c]) {
        line += "," + columns[c] + "_approx";
      }
    }
    out << line << '\n';
    for (const auto& row : rows) {
      line.clear();
      for (std::size_t c = 0; c < columns.size(); ++c) {
        line += (c ? "," : "") + csv_text(row[c].value);
        if (approx[c]) {
          line += ",";
          if (row[c].rational) {
            line += row[c].rational->to_decimal(*opts.decimal);
          }
        }
      }
      out << line << '\n';
    }
  }
};

std::string joined_class(const CurveClass& curve) {
  std::string out;
  for (std::size_t i = 0; i < curve.degrees.size(); ++i) {
    out += (i ? ";" : "") + std::to_string(curve.degrees[i]);
  }
  return out;
}

RowSet table_rows(const ClassTable& table, const std::string& scheme = {}) {
  RowSet rows;
  if (!scheme.empty()) {
    rows.columns.push_back("scheme");
  }
  rows.columns.insert(rows.columns.end(), {"genus", "class", "value"});
  for (const auto& [key, value] : table.entries()) {
    std::vector<Cell> row;
    if (!scheme.empty()) {
      row.push_back(cell(scheme));
    }
    row.push_back(cell(key.genus));
    row.push_back(cell(joined_class(key.curve)));
    row.push_back(cell(value));
    rows.rows.push_back(std::move(row));
  }
  return rows;
}

json with_approx(json doc, const ClassTable& table, const OutputOptions& opts) {
  if (!opts.decimal) {
    return doc;
  }
  std::size_t i = 0;
  for (const auto& [key, value] : table.entries()) {
    doc["entries"][i++]["approx"] = value.to_decimal(*opts.decimal);
  }
  doc["approx_digits"] = *opts.decimal;
  return doc;
}

void write_table(std::ostream& out, const ClassTable& table, const OutputOptions& opts) {
  if (opts.format == Format::csv) {
    table_rows(table).write(out, opts);
    return;
  }
  out << with_approx(table_to_json(table), table, opts).dump(2) << '\n';
}

void write_table(std::ostream& out, const BPSTable& table, const OutputOptions& opts) {
  if (opts.format == Format::csv) {
    table_rows(table).write(out, opts);
    return;
  }
  out << with_approx(table_to_json(table), table, opts).dump(2) << '\n';
}

ClassTable genus_truncated(const ClassTable& table, int max_genus) {
  ClassTable out(table.rank(), std::min(table.max_genus(), max_genus), table.degree_cutoffs(),
                 table.canonical());
  for (const auto& [key, value] : table.entries()) {
    if (key.genus <= out.max_genus()) {
      out.set(key.genus, key.curve, value);
    }
  }
  return out;
}

// ---- subcommand bodies ----

struct SeriesArgs {
  long exponent = 1;
  int order = 6;
  long scale = 1;
  bool log_q = false;
};

void run_series(const SeriesArgs& a, std::ostream& out, const OutputOptions& opts) {
  EvenSeries series = a.log_q ? alpha_via_log(a.order) : int_pow(sine_ratio(a.order), a.exponent);
  series = scale_variable(series, a.scale);
  RowSet rows;
  rows.columns = {"h", "value"};
  for (int h = 0; h <= series.order(); ++h) {
    rows.rows.push_back({cell(h), cell(series[static_cast<std::size_t>(h)])});
  }
  if (opts.format == Format::csv) {
    rows.write(out, opts);
    return;
  }
  json doc;
  doc["series"] = a.log_q ? "log((t/2)/sin(t/2))" : "(sin(t/2)/(t/2))^exponent";
  if (!a.log_q) {
    doc["exponent"] = a.exponent;
  }
  doc["scale"] = a.scale;
  doc["order"] = a.order;
  json coeffs = json::array();
  for (const auto& c : series.coefficients()) {
    coeffs.push_back(c.to_string());
  }
  doc["coefficients"] = std::move(coeffs);
  if (opts.decimal) {
    json approx = json::array();
    for (const auto& c : series.coefficients()) {
      approx.push_back(c.to_decimal(*opts.decimal));
    }
    doc["coefficients_approx"] = std::move(approx);
  }
  out << doc.dump(2) << '\n';
}

struct ContribArgs {
  int genus = 0;
  int anti_k = 0;
  int max_h = 0;
  long d = 1;
  std::string model = "geometric";
  std::string route = "series";
};

void run_contrib(const ContribArgs& a, std::ostream& out, const OutputOptions& opts) {
  if (a.anti_k > 0 && a.d != 1) {
    throw UsageError("--d must be 1 when --anti-k > 0 (only degree-1 covers enter)");
  }
  if (a.route == "partition" && a.d != 1) {
    throw UsageError("--route partition computes degree-1 contributions; use --d 1");
  }
  const CoverModel model = parse_cover_model(a.model);
  const GeometrySignature sig(a.genus, a.anti_k);

  RowSet rows;
  rows.columns = {"h", "defined", "value"};
  const EvenSeries series = contribution_series(sig, a.max_h);
  for (int h = 0; h <= a.max_h; ++h) {
    std::optional<Rational> value;
    if (a.route == "partition") {
      value = contribution_partition_sum(sig, h);
    } else if (a.anti_k > 0) {
      value = series[static_cast<std::size_t>(h)];
    } else {
      value = contribution_degree(a.genus, h, a.d, model).value;
    }
    rows.rows.push_back({cell(h), cell(value.has_value()), value ? cell(*value) : null_cell()});
  }
  json header{{"genus", a.genus}, {"anti_k", a.anti_k}, {"d", a.d},
              {"model", to_string(model)}, {"route", a.route}};
  rows.write(out, opts, std::move(header));
}

void run_hodge(const std::string& kind, int max_q, int max_h, std::ostream& out,
               const OutputOptions& opts) {
  RowSet rows;
  json header{{"kind", kind}};
  if (kind == "alpha") {
    const EvenSeries q_series = alpha_via_log(max_q);
    rows.columns = {"q", "alpha", "alpha_via_log", "equal"};
    for (int q = 1; q <= max_q; ++q) {
      const Rational a = alpha(q);
      const Rational& l = q_series[static_cast<std::size_t>(q)];
      rows.rows.push_back({cell(q), cell(a), cell(l), cell(a == l)});
    }
  } else if (kind == "kappa") {
    rows.columns = {"q", "kappa_integral"};
    for (int q = 2; q <= max_q; ++q) {
      rows.rows.push_back({cell(q), cell(kappa_integral(q))});
    }
  } else if (kind == "faber") {
    rows.columns = {"q", "alpha", "kappa_integral", "ratio", "expected", "equal"};
    bool all_equal = true;
    for (int q = 2; q <= max_q; ++q) {
      const Rational ratio = faber_ratio_check(q);
      const Rational expected = faber_expected_ratio(q);
      all_equal = all_equal && ratio == expected;
      rows.rows.push_back({cell(q), cell(alpha(q)), cell(kappa_integral(q)), cell(ratio),
                           cell(expected), cell(ratio == expected)});
    }
    header["all_equal"] = all_equal;
  } else {
    rows.columns = {"h", "i", "value"};
    const auto table = psi_lambda_table(max_h);
    for (int h = 1; h <= max_h; ++h) {
      for (int i = 0; i <= h; ++i) {
        rows.rows.push_back(
            {cell(h), cell(i), cell(table[static_cast<std::size_t>(h - 1)][static_cast<std::size_t>(i)])});
      }
    }
  }
  rows.write(out, opts, std::move(header));
}

struct TableArgs {
  std::string input;
  std::string model = "mtheory";
  std::optional<int> max_genus;
  std::vector<int> degree_cutoffs;
  std::vector<int> canonical;
};

void run_gv(const std::string& action, const TableArgs& a, std::ostream& out,
            const OutputOptions& opts) {
  const CoverModel model = parse_cover_model(a.model);
  const ClassTable input = load_table(a.input);
  if (action == "forward") {
    const BPSTable bps(input);
    const int genus = a.max_genus.value_or(bps.max_genus());
    const std::vector<int> cutoffs = a.degree_cutoffs.empty() ? bps.degree_cutoffs() : a.degree_cutoffs;
    write_table(out, gv_forward(bps, genus, cutoffs, model), opts);
    return;
  }
  const GWTable gw(input);
  if (action == "invert") {
    write_table(out, gv_invert(gw, model), opts);
    return;
  }

  // audit: both integrality schemes on one table. The geometric multiple
  // cover corrections are only known through genus 1.
  const BPSTable mtheory = gv_invert(gw, CoverModel::mtheory);
  const BPSTable geometric = gv_invert(GWTable(genus_truncated(gw, 1)), CoverModel::geometric);
  if (opts.format == Format::csv) {
    RowSet rows = table_rows(mtheory, "mtheory");
    for (auto& row : table_rows(geometric, "geometric").rows) {
      rows.rows.push_back(std::move(row));
    }
    rows.write(out, opts);
    return;
  }
  json doc;
  doc["mtheory"] = with_approx(table_to_json(mtheory), mtheory, opts);
  doc["geometric"] = with_approx(table_to_json(geometric), geometric, opts);
  doc["integral"] = {{"mtheory", mtheory.integrality_report.empty()},
                     {"geometric", geometric.integrality_report.empty()}};
  out << doc.dump(2) << '\n';
}

void run_enum(const std::string& action, const TableArgs& a, std::ostream& out,
              const OutputOptions& opts) {
  const ClassTable input = load_table(a.input);
  if (action == "forward") {
    std::vector<int> canonical = a.canonical;
    if (canonical.empty()) {
      if (!input.canonical()) {
        throw UsageError("enum forward needs --canonical or a \"canonical\" field in the input");
      }
      canonical = *input.canonical();
    }
    write_table(out, enumerative_forward(ETable(input), canonical), opts);
    return;
  }
  GWTable gw(input);
  if (!a.canonical.empty()) {
    gw.set_canonical(a.canonical);
  }
  write_table(out, enumerative_solve(gw), opts);
}

int run_verify(const VerifyOptions& options, std::ostream& out, const OutputOptions& opts) {
  const auto results = run_identity_suites(options);
  int passed = 0;
  int failed = 0;
  RowSet rows;
  rows.columns = {"suite", "passed", "failed"};
  json suites = json::array();
  for (const auto& r : results) {
    passed += r.passed;
    failed += r.failed;
    rows.rows.push_back({cell(r.name), cell(r.passed), cell(r.failed)});
    suites.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed},
                      {"failures", r.failures}});
  }
  if (opts.format == Format::csv) {
    rows.write(out, opts);
  } else {
    json doc{{"suites", suites}, {"passed", passed}, {"failed", failed}};
    out << doc.dump(2) << '\n';
  }
  return failed == 0 ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degenerate contributions, Hodge integrals and BPS extraction", "gwdeg"};
  app.require_subcommand(1);

  std::string format = "json";
  int decimal = -1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--decimal", decimal, "Add N-digit decimal approximations next to exact values")
      ->check(CLI::NonNegativeNumber);

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Coefficients of S(t)^m or of log(1/S(t)) in t^2");
  series->add_option("--exponent", series_args.exponent, "Power m of S(t)")->capture_default_str();
  series->add_option("--order", series_args.order, "Truncation order T (coefficients of t^0..t^2T)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  series->add_option("--scale", series_args.scale, "Substitute t -> d t")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  series->add_flag("--log", series_args.log_q, "Emit Q(t) = log((t/2)/sin(t/2)) instead");

  ContribArgs contrib_args;
  auto* contrib = app.add_subcommand("contrib", "Degenerate contributions C_g(h,d) for h = 0..max-h");
  contrib->add_option("--genus", contrib_args.genus, "Curve genus g")
      ->required()
      ->check(CLI::NonNegativeNumber);
  contrib->add_option("--anti-k", contrib_args.anti_k, "-K_X . beta (0 for Calabi-Yau)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  contrib->add_option("--max-h", contrib_args.max_h, "Largest genus increment h")
      ->required()
      ->check(CLI::NonNegativeNumber);
  contrib->add_option("--d", contrib_args.d, "Covering degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  contrib->add_option("--model", contrib_args.model, "Multiple cover model")
      ->check(CLI::IsMember({"geometric", "mtheory"}))
      ->capture_default_str();
  contrib->add_option("--route", contrib_args.route, "Evaluate via the series or the partition sum")
      ->check(CLI::IsMember({"series", "partition"}))
      ->capture_default_str();

  int max_q = 10;
  int max_h = 4;
  std::string hodge_kind;
  auto* hodge = app.add_subcommand("hodge", "Hodge integral values");
  hodge->require_subcommand(1);
  for (const char* name : {"alpha", "kappa", "faber", "psi-lambda"}) {
    auto* sub = hodge->add_subcommand(name);
    sub->add_option("--max-q", max_q, "Largest q")->check(CLI::Range(1, 200))->capture_default_str();
    sub->add_option("--max-h", max_h, "Largest h")->check(CLI::Range(1, 100))->capture_default_str();
    sub->callback([&hodge_kind, name] { hodge_kind = name; });
  }

  TableArgs table_args;
  std::string table_action;
  auto* gv = app.add_subcommand("gv", "Gopakumar-Vafa transform on JSON tables");
  gv->require_subcommand(1);
  for (const char* name : {"forward", "invert", "audit"}) {
    auto* sub = gv->add_subcommand(name);
    sub->add_option("--input", table_args.input, "Input table (JSON)")->required();
    if (std::string(name) != "audit") {
      sub->add_option("--model", table_args.model, "Multiple cover model")
          ->check(CLI::IsMember({"geometric", "mtheory"}))
          ->capture_default_str();
    }
    if (std::string(name) == "forward") {
      sub->add_option("--max-genus", table_args.max_genus, "Genus cutoff of the output")
          ->check(CLI::NonNegativeNumber);
      sub->add_option("--degree-cutoffs", table_args.degree_cutoffs, "Comma-separated degree cutoffs")
          ->delimiter(',');
    }
    sub->callback([&table_action, name] { table_action = name; });
  }

  auto* enumerative = app.add_subcommand("enum", "Enumerative corrections on JSON tables");
  enumerative->require_subcommand(1);
  for (const char* name : {"forward", "solve"}) {
    auto* sub = enumerative->add_subcommand(name);
    sub->add_option("--input", table_args.input, "Input table (JSON)")->required();
    sub->add_option("--canonical", table_args.canonical, "Comma-separated canonical vector c")
        ->delimiter(',');
    sub->callback([&table_action, name] { table_action = name; });
  }

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run the cross-route identity suites");
  verify->add_option("--tables", verify_options.random_tables, "Random tables per round-trip suite")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Seed for random tables")->capture_default_str();

  std::vector<std::string> argv_storage{"gwdeg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) {
    argv.push_back(s.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "gwdeg: " << e.what() << '\n';
    return kExitUsageError;
  }

  OutputOptions opts;
  opts.format = format == "csv" ? Format::csv : Format::json;
  if (decimal >= 0) {
    opts.decimal = decimal;
  }

  try {
    if (*series) {
      run_series(series_args, out, opts);
    } else if (*contrib) {
      run_contrib(contrib_args, out, opts);
    } else if (*hodge) {
      run_hodge(hodge_kind, max_q, max_h, out, opts);
    } else if (*gv) {
      run_gv(table_action, table_args, out, opts);
    } else if (*enumerative) {
      run_enum(table_action, table_args, out, opts);
    } else if (*verify) {
      return run_verify(verify_options, out, opts);
    }
  } catch (const UsageError& e) {
    err << "gwdeg: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "gwdeg: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace gwdeg::cli
