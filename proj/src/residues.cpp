#include "wld/residues.hpp"

#include <stdexcept>

#include "wld/truncpoly.hpp"

namespace wld {

namespace {

void check_r(int r, bool allow_large_r) {
  if (r < 1) throw std::invalid_argument("residues: r must be >= 1");
  const int hard = TruncPoly::kMaxVars;
  if (r > hard || (!allow_large_r && r > kDefaultMaxR))
    throw std::invalid_argument("residues: r exceeds limit (pass the override for r > 8)");
}

// Delta(z_1^2,...,z_r^2) * Delta(z_1,...,z_r) at cap 2r-2
TruncPoly vandermonde_pair(int r) {
  const int cap = 2 * r - 2;
  TruncPoly p = TruncPoly::vandermonde(r, cap, 2);
  return p * TruncPoly::vandermonde(r, cap, 1);
}

// coefficient of z_1^{2r-2}...z_r^{2r-2} in P * e^{z_1+...+z_r}
Rational pair_with_exponential(int r, const TruncPoly& p) {
  const int cap = 2 * r - 2;
  std::vector<Rational> inv_fact(static_cast<std::size_t>(cap + 1));
  for (int m = 0; m <= cap; ++m) inv_fact[static_cast<std::size_t>(m)] = Rational::factorial(static_cast<unsigned long>(m)).inverse();
  Rational total(0);
  p.for_each_term([&](const std::vector<int>& e, const Rational& c) {
    Rational t = c;
    for (int i = 0; i < r; ++i) t *= inv_fact[static_cast<std::size_t>(cap - e[static_cast<std::size_t>(i)])];
    total += t;
  });
  return total;
}

Rational prefactor(int r) {
  Rational pref = Rational(2).pow(r) / Rational::factorial(static_cast<unsigned long>(r));
  if (((r * (r - 1)) / 2) % 2 != 0) pref = -pref;
  return pref;
}

}  // namespace

const Rational& BTable::at(int j) const {
  auto it = values.find(j);
  if (it == values.end()) throw std::out_of_range("BTable: j outside [0, 2r-2]");
  return it->second;
}

Rational b_coefficient(int r, int j, bool allow_large_r) {
  check_r(r, allow_large_r);
  if (j < 0) throw std::invalid_argument("residues: j must be >= 0");
  const int cap = 2 * r - 2;
  if (j > cap) return Rational(0);  // the shifted monomial overshoots every pole
  const TruncPoly base = vandermonde_pair(r);
  TruncPoly sum(r, cap);
  for (int i = 0; i < r; ++i) {
    TruncPoly shifted = base;
    shifted.shift(i, j);
    sum += shifted;
  }
  return prefactor(r) * pair_with_exponential(r, sum);
}

BTable b_table(int r, bool allow_large_r) {
  check_r(r, allow_large_r);
  const int cap = 2 * r - 2;
  const TruncPoly base = vandermonde_pair(r);
  const Rational pref = prefactor(r);
  BTable table;
  table.r = r;
  for (int j = 0; j <= cap; ++j) {
    TruncPoly sum(r, cap);
    for (int i = 0; i < r; ++i) {
      TruncPoly shifted = base;
      shifted.shift(i, j);
      sum += shifted;
    }
    table.values[j] = pref * pair_with_exponential(r, sum);
  }
  return table;
}

Rational g_r_at_one(int r, bool allow_large_r) {
  return b_coefficient(r, 0, allow_large_r) / Rational(r);
}

bool vanishing_check(int r, std::span<const int> alpha_exponents, bool allow_large_r) {
  check_r(r, allow_large_r);
  if (static_cast<int>(alpha_exponents.size()) != r)
    throw std::invalid_argument("residues: alpha must have r entries");
  TruncPoly p = vandermonde_pair(r);
  for (int i = 0; i < r; ++i) {
    if (alpha_exponents[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("residues: negative alpha");
    p.shift(i, alpha_exponents[static_cast<std::size_t>(i)]);
  }
  return pair_with_exponential(r, p).is_zero();
}

Rational b_coefficient_single_variable(int r, int j, bool allow_large_r) {
  check_r(r, allow_large_r);
  const int cap = 2 * r - 2;
  if (j > cap) return Rational(0);
  TruncPoly p = vandermonde_pair(r);
  p.shift(0, j);
  p.scale(Rational(r));
  return prefactor(r) * pair_with_exponential(r, p);
}

}  // namespace wld
