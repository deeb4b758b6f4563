// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "stacksort/acceptance.hpp"

int main(int argc, char** argv) {
  unsigned jobs = 1;
  if (argc > 1) jobs = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
  if (jobs == 0) jobs = 1;
  int failed = 0;
  stacksort::run_acceptance(jobs, [&](const stacksort::CriterionResult& r) {
    std::printf("%s\n", stacksort::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d of 12 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
