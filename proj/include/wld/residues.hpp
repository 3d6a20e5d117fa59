#ifndef WLD_RESIDUES_HPP
#define WLD_RESIDUES_HPP

#include <map>
#include <span>
#include <vector>

#include "wld/rational.hpp"

namespace wld {

// Exact values of the residue coefficients b_r(j): the r-fold Cauchy
// coefficient of z_1^{2r-2}...z_r^{2r-2} in
//   Delta(z^2) Delta(z) (z_1^j + ... + z_r^j) e^{z_1+...+z_r},
// times (-1)^{r(r-1)/2} 2^r / r!. Realized as truncated-polynomial
// coefficient extraction, never numerical contouring.
struct BTable {
  int r = 0;
  std::map<int, Rational> values;  // j in [0, 2r-2]

  const Rational& at(int j) const;
};

// default guard; term counts grow combinatorially beyond it
inline constexpr int kDefaultMaxR = 8;

Rational b_coefficient(int r, int j, bool allow_large_r = false);
BTable b_table(int r, bool allow_large_r = false);

// b_r(0) = r * g_r(1); exposed read-only
Rational g_r_at_one(int r, bool allow_large_r = false);

// True iff the extraction of Delta(z^2) Delta(z) z^alpha e^{sum z} at the
// (2r-2,...,2r-2) coefficient is exactly zero. Guaranteed under
// sum(alpha) >= r(r-1)/2 + 1; outside that range it reports the literal test.
bool vanishing_check(int r, std::span<const int> alpha_exponents, bool allow_large_r = false);

// Extraction with the symmetrized factor replaced by r * z_1^j; equal to
// b_coefficient by symmetry of the rest of the integrand.
Rational b_coefficient_single_variable(int r, int j, bool allow_large_r = false);

}  // namespace wld

#endif
