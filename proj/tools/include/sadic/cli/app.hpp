#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sadic::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum ExitCode : int { kOk = 0, kDomainError = 1, kResourceError = 2 };

struct RunConfig {
  std::string subcommand;
  int s = 3;
  int u = 0;
  bool u_given = false;
  std::string alphabet;  // builtin name or JSON path; empty means S_(s,u)
  std::string base;      // block list
  std::string blocks;
  std::string tail;
  std::string prefix;
  std::string period;
  int p = 0;             // 0: every admissible p
  std::size_t depth = 12;
  std::size_t k = 6;
  std::size_t random = 0;
  std::size_t budget = 0;  // 0: library default
  std::string scales = "4..10";
  double tolerance = 0.0;  // 0: command default
  std::string format;      // json or csv; empty: command default
  std::string output;      // empty: stdout
  std::string only;
  bool children = false;
  std::uint64_t seed = kDefaultSeed;
};

/// Parses argv-style arguments (without the program name), runs the
/// subcommand and writes the report to `out` or to the --output file.
/// Diagnostics go to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed and validated configuration.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sadic::cli
