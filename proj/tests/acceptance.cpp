// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "wld/threads.hpp"
#include "wld/verify.hpp"

int main(int argc, char** argv) {
  wld::VerifyLevel level = wld::VerifyLevel::full;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--fast") == 0) level = wld::VerifyLevel::fast;

  const int threads = wld::resolve_thread_count(0);
  const auto results = wld::run_verification(level, threads, 2024);

  int failures = 0;
  for (const auto& c : results) {
    std::printf("[%s] %-28s measured %-14.6g tol %-10.4g %6.2f s  %s\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance, c.seconds,
                c.note.c_str());
    if (!c.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
