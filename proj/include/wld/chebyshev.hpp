#ifndef WLD_CHEBYSHEV_HPP
#define WLD_CHEBYSHEV_HPP

#include <functional>
#include <utility>
#include <vector>

#include "wld/rational.hpp"

namespace wld {

// Rescaled second-kind Chebyshev family: T_0 = 1, T_1 = x,
// T_{n+1} = x T_n - T_{n-1}; T_n(2 cos t) = sin((n+1)t)/sin(t).
// Orthonormal for the Sato-Tate measure (1/pi) sqrt(1 - x^2/4) dx on [-2, 2].

double cheb_eval(int ell, double x);

// exact monomial coefficients of T_ell
std::vector<Rational> cheb_coefficients(int ell);

// integral T_ell T_m dmu_inf by quadrature under x = 2 cos(theta)
double cheb_orthonormality(int ell, int m);

// integral of f against mu_inf, adaptive in theta; defaults to a tenth of the
// process-wide quadrature tolerance
double sato_tate_integral(const std::function<double(double)>& f, double rel_tol = -1.0);

enum class SeriesKind { plain, ell, ell2, ell3 };

// truncated sum_l l^k T_l(x) t^l against the closed rational form; the
// truncation point is chosen so the geometric tail bound is below 1e-13
std::pair<double, double> generating_series_check(SeriesKind kind, double x, double t);

}  // namespace wld

#endif
