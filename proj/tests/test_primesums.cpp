#include <doctest.h>

#include <cmath>

#include "wld/primesums.hpp"

using namespace wld;

TEST_CASE("sieve checkpoints") {
  const PrimeTable small = sieve(30);
  CHECK(small.primes == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  const PrimeTable t10 = sieve(10);
  CHECK(t10.primes.size() == 4);
  const PrimeTable big = sieve(1'000'000);
  CHECK(big.primes.size() == 78498);
  CHECK(big.primes.back() == 999983);
  CHECK_THROWS(sieve(1));
  CHECK_THROWS(sieve(2'000'000'000ULL));
}

TEST_CASE("sieve agrees with trial division on a sample") {
  const PrimeTable t = sieve(100000);
  auto is_prime = [](std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  std::size_t idx = 0;
  for (std::uint32_t n = 99000; n <= 100000; ++n) {
    while (idx < t.primes.size() && t.primes[idx] < n) ++idx;
    const bool in_table = idx < t.primes.size() && t.primes[idx] == n;
    CHECK(in_table == is_prime(n));
  }
}

TEST_CASE("partial sums: trivial and guarded cases") {
  const PrimeTable t = sieve(1000);
  const Lemma41Result zero = lemma41_partial_sum(1, 1e6, zero_pair(0.4), t);
  CHECK(zero.lhs == 0.0);
  // sieve bound below R^delta is rejected
  CHECK_THROWS(lemma41_partial_sum(1, 1e12, fejer_pair(0.5), t));
}

TEST_CASE("partial sums approach the main term") {
  const PrimeTable t = sieve(4'000'000);
  const TestFunctionPair pair = fejer_pair(0.5);
  const Lemma41Result r12 = lemma41_partial_sum(2, 1e12, pair, t);
  CHECK(r12.rel_error < 0.1);
  const Lemma41Result r8 = lemma41_partial_sum(2, 1e8, pair, t);
  CHECK(r12.rel_error < r8.rel_error);
  // the n = 1 constant is larger; only the trend is asserted here
  const Lemma41Result s8 = lemma41_partial_sum(1, 1e8, pair, t);
  const Lemma41Result s12 = lemma41_partial_sum(1, 1e12, pair, t);
  CHECK(s12.rel_error < s8.rel_error);
}

TEST_CASE("explicit formula constants match the kernel integrals") {
  for (int r : {1, 2, 3}) {
    const double delta = r == 2 ? 0.2 : 0.45;
    const TestFunctionPair pair = fejer_pair(delta);
    const double lhs = explicit_formula_rhs(r, pair);
    const double rhs = density_functional({KernelFamily::theorem_a, r}, pair).value;
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
  CHECK_THROWS(explicit_formula_rhs(2, fejer_pair(0.3)));  // outside the window
  CHECK_THROWS(explicit_formula_rhs(4, fejer_pair(0.1)));
}
