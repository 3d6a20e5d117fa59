#include "wld/chebyshev.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "wld/quadrature.hpp"

namespace wld {

double cheb_eval(int ell, double x) {
  if (ell < 0) throw std::invalid_argument("cheb_eval: ell must be >= 0");
  if (ell == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int n = 1; n < ell; ++n) {
    const double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<Rational> cheb_coefficients(int ell) {
  if (ell < 0) throw std::invalid_argument("cheb_coefficients: ell must be >= 0");
  std::vector<Rational> prev{Rational(1)};
  if (ell == 0) return prev;
  std::vector<Rational> cur{Rational(0), Rational(1)};
  for (int n = 1; n < ell; ++n) {
    std::vector<Rational> next(static_cast<std::size_t>(n) + 2, Rational(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double sato_tate_integral(const std::function<double(double)>& f, double rel_tol) {
  if (rel_tol <= 0.0) rel_tol = 0.1 * default_quad_rel_tol();
  // x = 2 cos(theta) removes the endpoint square roots
  auto integrand = [&f](double theta) {
    const double s = std::sin(theta);
    return f(2.0 * std::cos(theta)) * s * s;
  };
  return (2.0 / std::numbers::pi) * integrate_adaptive(integrand, 0.0, std::numbers::pi, rel_tol).value;
}

double cheb_orthonormality(int ell, int m) {
  if (ell < 0 || m < 0) throw std::invalid_argument("cheb_orthonormality: indices must be >= 0");
  return sato_tate_integral([ell, m](double x) { return cheb_eval(ell, x) * cheb_eval(m, x); });
}

std::pair<double, double> generating_series_check(SeriesKind kind, double x, double t) {
  if (!(std::abs(x) < 2.0)) throw std::invalid_argument("generating_series_check: need |x| < 2");
  if (!(std::abs(t) < 1.0)) throw std::invalid_argument("generating_series_check: need |t| < 1");

  const int k = static_cast<int>(kind);
  // tail bound: |T_l(x)| <= l+1, so sum_{l>L} l^k (l+1) |t|^l is below the
  // geometric envelope (L+1)^{k+1} |t|^{L+1} / (1-|t|)^2 once L > k/log(1/|t|)
  const double at = std::abs(t);
  int L = 32;
  while (true) {
    const double env = std::pow(L + 1.0, k + 1.0) * std::pow(at, L + 1.0) / ((1.0 - at) * (1.0 - at));
    if (env < 1e-13 || L > 20000) break;
    L += 32;
  }

  // compensated summation: the terms reach O(10) while the targets sit at
  // 1e-12 absolute
  double series = 0.0, carry = 0.0;
  double prev = 1.0, cur = x;
  double tl = 1.0;
  for (int l = 0; l <= L; ++l) {
    const double Tl = l == 0 ? 1.0 : cur;
    const double term = std::pow(static_cast<double>(l), k) * Tl * tl - carry;
    const double next_sum = series + term;
    carry = (next_sum - series) - term;
    series = next_sum;
    tl *= t;
    if (l >= 1) {
      const double next = x * cur - prev;
      prev = cur;
      cur = next;
    }
  }

  // the numerators cancel near |x| -> 2, so evaluate them in extended
  // precision; inputs are exact in long double
  const long double X = x, T = t;
  const long double d = T * T - X * T + 1.0L;
  long double closed = 0.0L;
  switch (kind) {
    case SeriesKind::plain:
      closed = 1.0L / d;
      break;
    case SeriesKind::ell:
      closed = (-2.0L * T * T + X * T) / (d * d);
      break;
    case SeriesKind::ell2:
      closed = (4.0L * T * T * T * T - 3.0L * X * T * T * T + (X * X - 4.0L) * T * T + X * T) /
               (d * d * d);
      break;
    case SeriesKind::ell3: {
      // t (d/dt) applied to the ell^2 form; the numerator below is that
      // derivative expanded and verified against the series
      const long double T3 = T * T * T, T4 = T3 * T, T5 = T4 * T;
      closed = T *
               (-8.0L * T5 + 5.0L * X * T4 + (32.0L - 4.0L * X * X) * T3 +
                (X * X * X - 18.0L * X) * T * T + (4.0L * X * X - 8.0L) * T + X) /
               (d * d * d * d);
      break;
    }
  }
  return {series, static_cast<double>(closed)};
}

}  // namespace wld
