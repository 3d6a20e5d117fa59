#include "wld/measures.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "wld/chebyshev.hpp"
#include "wld/quadrature.hpp"

namespace wld {

namespace {

void check_spec(const MeasureSpec& spec) {
  if (spec.p < 2) throw std::invalid_argument("measures: p must be >= 2");
  if (spec.r < 1) throw std::invalid_argument("measures: r must be >= 1");
  if (!spec.harmonic && spec.r > 3)
    throw std::invalid_argument("measures: unweighted family only known for r <= 3");
}

double weight_minus(long p, double x, int r) {
  return std::pow(1.0 - x / std::sqrt(static_cast<double>(p)) + 1.0 / static_cast<double>(p), -r);
}

}  // namespace

double measure_density(const MeasureSpec& spec, double x) {
  check_spec(spec);
  if (std::abs(x) > 2.0) throw std::invalid_argument("measure_density: need |x| <= 2");
  const double p = static_cast<double>(spec.p);
  const double sp = std::sqrt(p);
  const double minus = 1.0 - x / sp + 1.0 / p;
  const double plus = 1.0 + x / sp + 1.0 / p;
  if (spec.harmonic)
    return std::pow(minus, -spec.r) / a_pr_closed(spec.p, spec.r).to_double();
  switch (spec.r) {
    case 1:
      return (1.0 - 1.0 / p) * std::pow(1.0 + 1.0 / p, 2) / (minus * minus * plus);
    case 2:
      return std::pow(1.0 - 1.0 / (p * p), 3) / (1.0 + 1.0 / (p * p)) /
             (minus * minus * minus * plus);
    case 3: {
      const double c = std::pow(1.0 - 1.0 / p, 5) * std::pow(1.0 + 1.0 / p, 4) /
                       (1.0 + 1.0 / p + 4.0 / (p * p) + 1.0 / (p * p * p) + 1.0 / (p * p * p * p));
      return c / (minus * minus * minus * minus * plus);
    }
    default:
      throw std::logic_error("measure_density: unreachable");
  }
}

double cheb_moment(const MeasureSpec& spec, int ell) {
  check_spec(spec);
  if (ell < 0) throw std::invalid_argument("cheb_moment: ell must be >= 0");
  return sato_tate_integral(
      [&spec, ell](double x) { return cheb_eval(ell, x) * measure_density(spec, x); });
}

double cheb_moment_closed(const MeasureSpec& spec, int ell) {
  check_spec(spec);
  if (ell < 0) throw std::invalid_argument("cheb_moment_closed: ell must be >= 0");
  const double p = static_cast<double>(spec.p);
  const double scale = std::pow(p, -0.5 * ell);
  if (spec.harmonic) {
    switch (spec.r) {
      case 1:
        return scale;
      case 2:
        return (ell + 1.0) * scale;
      case 3:
        return ((0.5 - 0.5 / p) * ell * ell + (1.5 - 0.5 / p) * ell + 1.0) * scale;
      default:
        throw std::invalid_argument("cheb_moment_closed: harmonic closed form known for r <= 3");
    }
  }
  switch (spec.r) {
    case 1: {
      // local lattice sum over l = p^s, p^a | l^2: even a contribute 1, odd a
      // contribute 1/p after dividing out the a = 0 factor
      const long evens = (ell + 2) / 2, odds = (ell + 1) / 2;
      return scale * (static_cast<double>(evens) + static_cast<double>(odds) / p);
    }
    case 2: {
      double bracket = ell + 1.0;
      for (int a = 1; a <= ell; ++a) {
        const double parity = a % 2 == 0 ? 1.0 : 2.0 * p / (p * p + 1.0);
        bracket += (ell + 1.0 - a) * (1.0 - 1.0 / p) * parity;
      }
      return scale * bracket;
    }
    case 3:
      return unweighted_moment_r3(spec.p, ell);
    default:
      throw std::logic_error("cheb_moment_closed: unreachable");
  }
}

Rational a_pr_closed_power_form(long p, int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("a_pr_closed_power_form: r must be in {1,2,3}");
  const Rational one_minus = Rational(1) - Rational(1, p);
  return one_minus.pow(-static_cast<long>(r) * (r - 1) / 2);
}

Rational a_pr_closed_binomial_form(long p, int r) {
  if (r < 3) throw std::invalid_argument("a_pr_closed_binomial_form: r must be >= 3");
  const Rational inv_p(1, p);
  Rational sum(0);
  for (int l = 0; l <= r - 1; ++l) {
    const Rational b = Rational::binomial(r - 1, l);
    sum += b * b * inv_p.pow(l);
  }
  for (int l = 0; l <= r - 3; ++l)
    sum -= Rational::binomial(r - 3, l) * Rational::binomial(r + 1, l + 2) * inv_p.pow(l + 1);
  const Rational one_minus = Rational(1) - inv_p;
  return one_minus.pow(1 - 2 * static_cast<long>(r)) * sum;
}

Rational a_pr_closed(long p, int r) {
  if (p < 2) throw std::invalid_argument("a_pr_closed: p must be >= 2");
  if (r < 1) throw std::invalid_argument("a_pr_closed: r must be >= 1");
  return r <= 3 ? a_pr_closed_power_form(p, r) : a_pr_closed_binomial_form(p, r);
}

SeriesValue a_pr_hypergeometric(long p, int r) {
  if (p < 2 || r < 1) throw std::invalid_argument("a_pr_hypergeometric: bad arguments");
  const double pd = static_cast<double>(p);
  SeriesValue out;
  // track the two binomials separately
  double c1 = 1.0;  // C(r+l-1, l)
  double c2 = static_cast<double>(r) * (r + 1) / 2.0;  // C(r+l+1, l+2)
  long l = 0;
  while (true) {
    const double term = c1 * c1 * std::pow(pd, -static_cast<double>(l)) -
                        c1 * c2 * std::pow(pd, -static_cast<double>(l + 1));
    out.value += term;
    const double ratio1 = static_cast<double>(r + l) / (l + 1.0);
    const double ratio2 = static_cast<double>(r + l + 2) / (l + 3.0);
    const double rho = std::max(ratio1 * ratio1, ratio1 * ratio2) / pd;
    const double mag = (c1 * c1 + c1 * c2 / pd) * std::pow(pd, -static_cast<double>(l));
    if (rho < 1.0 && mag * rho / (1.0 - rho) < 1e-13 * std::abs(out.value)) {
      out.tail_bound = mag * rho / (1.0 - rho);
      break;
    }
    if (l > 4000) {
      out.tail_bound = mag;
      out.converged = false;
      break;
    }
    c1 *= ratio1;
    c2 *= ratio2;
    ++l;
  }
  return out;
}

double a_pr_quadrature(long p, int r) {
  if (p < 2 || r < 1) throw std::invalid_argument("a_pr_quadrature: bad arguments");
  const double pd = static_cast<double>(p);
  const double sp = std::sqrt(pd);
  auto f = [pd, sp, r](double theta) {
    const double s = std::sin(theta);
    return s * s * std::pow(1.0 - 2.0 * std::cos(theta) / sp + 1.0 / pd, -r);
  };
  return (2.0 / std::numbers::pi) * integrate_adaptive(f, 0.0, std::numbers::pi, 1e-13).value;
}

double a_pr(long p, int r, APrMethod method) {
  switch (method) {
    case APrMethod::closed:
      return a_pr_closed(p, r).to_double();
    case APrMethod::hypergeometric: {
      const SeriesValue v = a_pr_hypergeometric(p, r);
      if (!v.converged) throw std::runtime_error("a_pr: hypergeometric series truncation failure");
      return v.value;
    }
    case APrMethod::quadrature:
      return a_pr_quadrature(p, r);
  }
  throw std::logic_error("a_pr: bad method");
}

double delta_sato_tate(const std::vector<std::pair<long, std::vector<int>>>& prime_powers) {
  std::set<long> seen;
  double product = 1.0;
  for (const auto& [p, ells] : prime_powers) {
    if (p < 2) throw std::invalid_argument("delta_sato_tate: p must be >= 2");
    if (!seen.insert(p).second) throw std::invalid_argument("delta_sato_tate: duplicate prime group");
    if (ells.empty()) continue;
    product *= sato_tate_integral([&ells](double x) {
      double v = 1.0;
      for (int l : ells) v *= cheb_eval(l, x);
      return v;
    });
  }
  return product;
}

double A_p_at_zero(long p, int r, int m) {
  if (p < 2 || r < 1 || m < 0) throw std::invalid_argument("A_p_at_zero: bad arguments");
  const double pref = std::pow(1.0 - 1.0 / static_cast<double>(p), r * (r - 1) / 2);
  return pref *
         sato_tate_integral([p, r, m](double x) { return cheb_eval(m, x) * weight_minus(p, x, r); });
}

Rational g_value(long p, int ell) {
  if (p < 2 || ell < 0) throw std::invalid_argument("g_value: bad arguments");
  return Rational(ell + 1) +
         (Rational(1) - Rational(1, p)) * Rational(static_cast<long>(ell) * (ell + 1), 2);
}

namespace {

// sum_{b >= 0} g(p^{m+2b}) p^{-2b} in closed form: the summand is a quadratic
// polynomial in b against a geometric weight
Rational g_tail_series(long p, int m) {
  const Rational t(1, p * p);
  const Rational one(1);
  const Rational s0 = (one - t).inverse();
  const Rational s1 = t * (one - t).pow(-2);
  const Rational s2 = t * (one + t) * (one - t).pow(-3);
  const Rational c = one - Rational(1, p);
  const Rational m1(m + 1);
  const Rational half_mm1(static_cast<long>(m) * (m + 1), 2);
  return (m1 + c * half_mm1) * s0 + (Rational(2) + c * Rational(2 * m + 1)) * s1 +
         Rational(2) * c * s2;
}

}  // namespace

Rational H_value(long p, int ell) {
  if (p < 2 || ell < 0) throw std::invalid_argument("H_value: bad arguments");
  Rational total(0);
  for (int a = 0; a <= ell; ++a) {
    if (a % 2 == 0)
      total += g_tail_series(p, ell - a);
    else
      total += Rational(1, p) * g_tail_series(p, ell - a + 1);
  }
  return total;
}

Rational H_of_integer_ring(long p) { return H_value(p, 0); }

Rational H_ratio(long p, int ell) { return H_value(p, ell) / H_of_integer_ring(p); }

Rational appendix_closed_ratio(long p, int ell) {
  if (p < 2 || ell < 0) throw std::invalid_argument("appendix_closed_ratio: bad arguments");
  const Rational N(p);
  const Rational L(ell);
  const Rational D = N.pow(4) + N.pow(3) + Rational(4) * N.pow(2) + N + Rational(1);
  Rational v(0);
  v += L.pow(3) * (N - 1).pow(2) * (N + 1).pow(3) / (Rational(12) * N * D);
  v += L.pow(2) * (N - 1) * (N + 1).pow(2) * (Rational(5) * N.pow(2) + Rational(2) * N + 1) /
       (Rational(8) * N * D);
  v += L * (N + 1) *
       (Rational(17) * N.pow(4) + Rational(12) * N.pow(3) + Rational(20) * N.pow(2) - Rational(1)) /
       (Rational(12) * N * D);
  v += Rational(15) * N.pow(4) / (Rational(16) * D);
  v += Rational(21) * N.pow(3) / (Rational(16) * D);
  v += Rational(27) * N.pow(2) / (Rational(8) * D);
  v += Rational(13) * N / (Rational(8) * D);
  v += Rational(11, 16) / D;
  v += Rational(1) / (Rational(16) * N * D);
  Rational alt(0);
  alt += N.pow(4) / (Rational(16) * D);
  alt -= Rational(5) * N.pow(3) / (Rational(16) * D);
  alt += Rational(5) * N.pow(2) / (Rational(8) * D);
  alt -= Rational(5) * N / (Rational(8) * D);
  alt += Rational(5, 16) / D;
  alt -= Rational(1) / (Rational(16) * N * D);
  if (ell % 2 == 0)
    v += alt;
  else
    v -= alt;
  return v;
}

double unweighted_moment_r3(long p, int ell) {
  return std::pow(static_cast<double>(p), -0.5 * ell) * H_ratio(p, ell).to_double();
}

namespace {

std::map<long, std::pair<int, int>> merge_factorizations(const Factorization& m,
                                                         const Factorization& n) {
  std::map<long, std::pair<int, int>> merged;
  for (const auto& [p, e] : m) {
    if (p < 2 || e < 0) throw std::invalid_argument("tau: bad factorization");
    merged[p].first += e;
  }
  for (const auto& [p, e] : n) {
    if (p < 2 || e < 0) throw std::invalid_argument("tau: bad factorization");
    merged[p].second += e;
  }
  return merged;
}

}  // namespace

long tau_of_product_direct(const Factorization& m, const Factorization& n) {
  long tau = 1;
  for (const auto& [p, ee] : merge_factorizations(m, n)) {
    (void)p;
    tau *= ee.first + ee.second + 1;
  }
  return tau;
}

long tau_of_product_identity(const Factorization& m, const Factorization& n) {
  // sum over squarefree d | (m, n): mu(d) tau(m/d) tau(n/d)
  const auto merged = merge_factorizations(m, n);
  std::vector<long> common;
  for (const auto& [p, ee] : merged)
    if (ee.first >= 1 && ee.second >= 1) common.push_back(p);
  if (common.size() > 20) throw std::invalid_argument("tau: too many common primes");
  long total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << common.size()); ++mask) {
    const int mu = std::popcount(mask) % 2 == 0 ? 1 : -1;
    long tm = 1, tn = 1;
    for (const auto& [p, ee] : merged) {
      int drop = 0;
      for (std::size_t i = 0; i < common.size(); ++i)
        if ((mask >> i & 1) != 0 && common[i] == p) drop = 1;
      tm *= ee.first - drop + 1;
      tn *= ee.second - drop + 1;
    }
    total += mu * tm * tn;
  }
  return total;
}

}  // namespace wld
