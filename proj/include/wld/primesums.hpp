#ifndef WLD_PRIMESUMS_HPP
#define WLD_PRIMESUMS_HPP

#include <cstdint>
#include <vector>

#include "wld/kernels.hpp"

namespace wld {

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;
};

// segmented sieve of Eratosthenes; refuses limits above the memory budget
PrimeTable sieve(std::uint64_t limit);

struct Lemma41Result {
  double lhs = 0.0;        // (1/log R) sum_p (log p)^n / p * hat(log p / log R)
  double rhs = 0.0;        // (log R)^{n-1} integral_0^inf hat(u) u^{n-1} du
  double rel_error = 0.0;
};

// requires table.limit >= R^delta so every prime inside the support is present
Lemma41Result lemma41_partial_sum(int n, double R, const TestFunctionPair& pair,
                                  const PrimeTable& table);

// the limit value hat(0) + c_r phi(0) + moment integrals of hat, with
// (c_1, c_2, c_3) = (-1/2, -3/2, -5/2); equals integral phi W_r for test
// functions inside the support window alpha_r
double explicit_formula_rhs(int r, const TestFunctionPair& pair);

// the support window: alpha_1 = alpha_3 = 1/2, alpha_2 = 1/4
double support_window(int r);

}  // namespace wld

#endif
