#ifndef WLD_VERIFY_HPP
#define WLD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wld {

enum class VerifyLevel { fast, full };

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;   // worst observed deviation (units per check)
  double tolerance = 0.0;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string note;
};

// runs the acceptance checks; `full` adds the Monte Carlo reproduction
std::vector<CheckResult> run_verification(VerifyLevel level, int threads, std::uint64_t seed);

}  // namespace wld

#endif
