#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sadic/cli/app.hpp"
#include "sadic/cli/io.hpp"

namespace sadic::cli {

struct CriterionRow {
  int id = 0;
  std::string group;
  std::string title;
  bool passed = false;
  std::string observed;
  std::string expected;
  double seconds = 0.0;
};

struct ReproduceOptions {
  /// Criterion ids ("7") or group names ("dimension"); empty runs all.
  std::vector<std::string> only;
  std::uint64_t seed = kDefaultSeed;
  double boxcount_tolerance = 0.05;
};

/// Group of each criterion: dimension 1 2 7, cylinder 3 4 6, measure 5,
/// normality 8, codec 9.
std::vector<int> select_criteria(const std::vector<std::string>& only);

std::vector<CriterionRow> reproduce_all(const ReproduceOptions& options);

/// One "PASS"/"FAIL" line per row.
std::string format_table(const std::vector<CriterionRow>& rows);
json rows_to_json(const std::vector<CriterionRow>& rows);

}  // namespace sadic::cli
