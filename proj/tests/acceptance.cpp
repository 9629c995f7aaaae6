// Acceptance suite: runs every verification check at full scale and prints
// one pass/fail line per criterion.

#include <cstdio>

#include "polyesf/verify.hpp"

int main() {
  const polyesf::VerifyOptions opts;  // defaults are the full acceptance scale

  int index = 0;
  bool all_pass = true;
  double total_seconds = 0.0;

  std::printf("criterion  status  check               instances  seconds\n");
  std::printf("---------------------------------------------------------\n");
  const auto results = polyesf::run_all_checks(opts, [&](const polyesf::CheckResult& r) {
    ++index;
    all_pass &= r.passed;
    total_seconds += r.seconds;
    std::printf("%2d/11      %s    %-18s  %9ld  %7.2f%s%s\n", index,
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.instances, r.seconds,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
    std::fflush(stdout);
  });

  std::printf("---------------------------------------------------------\n");
  std::printf("%zu checks, %s, %.2fs total\n", results.size(),
              all_pass ? "all passed" : "FAILURES PRESENT", total_seconds);
  return all_pass ? 0 : 1;
}
