// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero iff a gating criterion fails.
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "deltak/parallel.hpp"
#include "deltak/selftest.hpp"

int main(int argc, char** argv) {
  deltak::SelftestOptions options;
  options.parallel_jobs = std::getenv("DELTAK_JOBS") ? deltak::default_jobs() : 8;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--no-stretch") == 0) options.stretch = false;
    else if (std::strcmp(argv[i], "--no-bench") == 0) options.benchmark = false;
    else options.only.push_back(std::atoi(argv[i]));
  }
  options.on_result = [](const deltak::CriterionResult& r) { std::cout << deltak::format_result(r) << std::endl; };
  const auto results = deltak::run_selftest(options);
  const bool ok = deltak::gating_passed(results);
  std::cout << (ok ? "gating criteria: all passed" : "gating criteria: FAILED") << std::endl;
  return ok ? 0 : 1;
}
