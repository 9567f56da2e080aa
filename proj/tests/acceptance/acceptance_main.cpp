#include <cstdio>
#include <cstdlib>
#include <string>

#include "sadic/cli/reproduce.hpp"

// Runs every acceptance criterion once and prints one line per criterion.
int main(int argc, char** argv) {
  sadic::cli::ReproduceOptions opt;
  for (int i = 1; i < argc; ++i) opt.only.emplace_back(argv[i]);
  const auto rows = sadic::cli::reproduce_all(opt);
  int failed = 0;
  for (const auto& r : rows) {
    std::printf("%s criterion %d: %s (%.2fs) | %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.observed.c_str());
    if (!r.passed) {
      std::printf("    expected: %s\n", r.expected.c_str());
      ++failed;
    }
  }
  std::printf("%zu/%zu criteria passed\n", rows.size() - static_cast<std::size_t>(failed), rows.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
