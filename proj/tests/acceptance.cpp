// Acceptance run: one line per criterion, nonzero exit if any of them fails.

#include <chrono>
#include <cstdio>

#include "schrod/verify.hpp"

int main() {
  auto t0 = std::chrono::steady_clock::now();
  auto results = schrod::verify::run_suite("all");
  int failed = 0;
  for (const auto& r : results) {
    failed += !r.passed;
    std::printf("%s criterion %2s  %-58s %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                r.seconds, r.detail.c_str());
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%zu/%zu criteria passed in %.2fs\n", results.size() - failed, results.size(), total);
  return failed == 0 ? 0 : 1;
}
