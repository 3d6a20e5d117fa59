#include "wld/primesums.hpp"

#include <cmath>
#include <stdexcept>

#include "wld/quadrature.hpp"

namespace wld {

PrimeTable sieve(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve: limit must be >= 2");
  if (limit > 1'000'000'000ULL) throw std::invalid_argument("sieve: limit above memory budget");
  PrimeTable table;
  table.limit = limit;

  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint32_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
  }

  constexpr std::uint64_t kSegment = 1 << 20;
  std::vector<bool> seg;
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    seg.assign(hi - lo + 1, true);
    for (std::uint32_t p : base) {
      const std::uint64_t pp = p;
      if (pp * pp > hi) break;
      std::uint64_t start = std::max(pp * pp, (lo + pp - 1) / pp * pp);
      for (std::uint64_t j = start; j <= hi; j += pp) seg[j - lo] = false;
    }
    for (std::uint64_t i = lo; i <= hi; ++i)
      if (seg[i - lo] && i >= 2) table.primes.push_back(static_cast<std::uint32_t>(i));
  }
  return table;
}

Lemma41Result lemma41_partial_sum(int n, double R, const TestFunctionPair& pair,
                                  const PrimeTable& table) {
  if (n < 1) throw std::invalid_argument("lemma41_partial_sum: n must be >= 1");
  if (R < 3.0) throw std::invalid_argument("lemma41_partial_sum: R too small");
  const double logR = std::log(R);
  if (!pair.zero && std::pow(R, pair.delta) > static_cast<double>(table.limit) + 0.5)
    throw std::invalid_argument("lemma41_partial_sum: sieve bound below R^delta");

  Lemma41Result out;
  double sum = 0.0;
  for (std::uint32_t p : table.primes) {
    const double lp = std::log(static_cast<double>(p));
    const double u = lp / logR;
    if (u >= pair.delta) break;  // support contract: hat vanishes beyond delta
    sum += std::pow(lp, n) / static_cast<double>(p) * pair.phi_hat(u);
  }
  out.lhs = sum / logR;
  const double moment =
      integrate_adaptive([&pair, n](double u) { return pair.phi_hat(u) * std::pow(u, n - 1); }, 0.0,
                         pair.delta, 1e-13)
          .value;
  out.rhs = std::pow(logR, n - 1) * moment;
  out.rel_error = out.rhs == 0.0 ? 0.0 : std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
  return out;
}

double support_window(int r) {
  switch (r) {
    case 1:
    case 3:
      return 0.5;
    case 2:
      return 0.25;
    default:
      throw std::invalid_argument("support_window: r must be in {1,2,3}");
  }
}

double explicit_formula_rhs(int r, const TestFunctionPair& pair) {
  if (r < 1 || r > 3) throw std::invalid_argument("explicit_formula_rhs: r must be in {1,2,3}");
  if (!pair.zero && pair.delta >= support_window(r))
    throw std::invalid_argument("explicit_formula_rhs: support exceeds the theorem's window");
  auto hat_moment = [&pair](int n) {
    return integrate_adaptive([&pair, n](double u) { return pair.phi_hat(u) * std::pow(u, n); },
                              0.0, pair.delta, 1e-13)
        .value;
  };
  const double hat0 = pair.phi_hat(0.0);
  const double phi0 = pair.phi(0.0);
  switch (r) {
    case 1:
      return hat0 - 0.5 * phi0;
    case 2:
      return hat0 - 1.5 * phi0 + 4.0 * hat_moment(1);
    default:
      return hat0 - 2.5 * phi0 + 12.0 * hat_moment(1) - 8.0 * hat_moment(3);
  }
}

}  // namespace wld
