#ifndef WLD_MEASURES_HPP
#define WLD_MEASURES_HPP

#include <map>
#include <utility>
#include <vector>

#include "wld/rational.hpp"

namespace wld {

// A named density on [-2, 2] relative to the Sato-Tate measure. p is any
// prime-power norm >= 2 (every formula depends on the prime ideal through
// N(p) only). harmonic=true carries the adjoint-normalized weight; the
// unweighted family is only known in closed form for r = 1, 2, 3.
struct MeasureSpec {
  long p = 2;
  int r = 1;
  bool harmonic = true;
};

double measure_density(const MeasureSpec& spec, double x);

// integral T_ell dmu by quadrature
double cheb_moment(const MeasureSpec& spec, int ell);

// exact-route moments (local Euler factors / resummed lattice sums):
//   harmonic r=1:  p^{-l/2}
//   harmonic r=2:  (l+1) p^{-l/2}
//   harmonic r=3:  ((1/2-1/2p) l^2 + (3/2-1/2p) l + 1) p^{-l/2}
//   unweighted r=1: p^{-l/2} (ceil((l+1)/2) + floor((l+1)/2)/p)
//   unweighted r=2: p^{-l/2} (l+1 + sum_a (l+1-a)(1-1/p){parity split})
//   unweighted r=3: p^{-l/2} H(p^l)/H(O_F)
double cheb_moment_closed(const MeasureSpec& spec, int ell);

// ---- the normalizer a(p, r) ----

enum class APrMethod { closed, hypergeometric, quadrature };

// closed: exact rational, power form for r <= 3 and the binomial double sum
// for r >= 3 (both agree at r = 3)
Rational a_pr_closed(long p, int r);
Rational a_pr_closed_power_form(long p, int r);     // (1-1/p)^{-r(r-1)/2}, r <= 3
Rational a_pr_closed_binomial_form(long p, int r);  // r >= 3 branch

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  bool converged = true;
};
SeriesValue a_pr_hypergeometric(long p, int r);  // truncated with tail bound
double a_pr_quadrature(long p, int r);           // (2/pi) integral of sin^2 / (...)^r

double a_pr(long p, int r, APrMethod method);

// ---- Sato-Tate product moments ----

// product over primes of integral T_{l_1} ... T_{l_k} dmu_inf; each entry is
// one prime with the exponent list it carries
double delta_sato_tate(const std::vector<std::pair<long, std::vector<int>>>& prime_powers);

// (1-1/p)^{r(r-1)/2} integral T_m(x) / (1 - x/sqrt(p) + 1/p)^r dmu_inf
double A_p_at_zero(long p, int r, int m);

// ---- the g / H apparatus ----

Rational g_value(long p, int ell);  // l+1 + (1-1/p) l(l+1)/2
// H(p^l): double series over alpha and beta with the inner beta-sums taken in
// closed form over rationals (no floating truncation)
Rational H_value(long p, int ell);
Rational H_of_integer_ring(long p);        // H(p^0), the l-sum local factor
Rational H_ratio(long p, int ell);         // H(p^l)/H(p^0)
Rational appendix_closed_ratio(long p, int ell);  // polynomial-in-1/N(p) closed form

double unweighted_moment_r3(long p, int ell);  // p^{-l/2} H_ratio

// ---- divisor identity ----

using Factorization = std::vector<std::pair<long, int>>;  // (prime, exponent)

long tau_of_product_direct(const Factorization& m, const Factorization& n);
// via tau(mn) = sum_{d | (m,n)} mu(d) tau(m/d) tau(n/d)
long tau_of_product_identity(const Factorization& m, const Factorization& n);

}  // namespace wld

#endif
