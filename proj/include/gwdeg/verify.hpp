#ifndef GWDEG_VERIFY_HPP
#define GWDEG_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gwdeg/tables.hpp"

namespace gwdeg {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failing cases

  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 19990325;
  int random_tables = 100;
};

/// Runs every cross-route identity suite and returns one result per suite.
std::vector<SuiteResult> run_identity_suites(const VerifyOptions& options = {});

/// Random sparse table with small integer values over the given box.
ClassTable random_integer_table(std::mt19937_64& rng, int rank, int max_genus,
                                const std::vector<int>& degree_cutoffs,
                                std::optional<std::vector<int>> canonical = std::nullopt);

}  // namespace gwdeg

#endif  // GWDEG_VERIFY_HPP
