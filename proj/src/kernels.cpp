#include "wld/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "wld/bigfloat.hpp"

namespace wld {

namespace {

using Kind = TrigRational::Kind;

constexpr int kTaylorOrder = 48;
constexpr mp_bitcnt_t kMidBandBits = 256;

// s_m = integral_0^1 t^m sin(2 pi x t) dt, needed alongside h_m
struct HPair {
  TrigRational h;
  TrigRational s;
};

const HPair& h_pair(int n) {
  static std::map<int, HPair> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) {
    HPair base;
    base.h = TrigRational::term(1, -1, Kind::sine, Rational(1));
    base.s = TrigRational::term(1, -1, Kind::constant, Rational(1)) -
             TrigRational::term(1, -1, Kind::cosine, Rational(1));
    cache.emplace(0, std::move(base));
  }
  for (int k = cache.rbegin()->first + 1; k <= n; ++k) {
    const HPair& prev = cache.at(k - 1);
    HPair p;
    // h_k = sin(2 pi x)/(2 pi x) - (k/(2 pi x)) s_{k-1}
    p.h = TrigRational::term(1, -1, Kind::sine, Rational(1)) - prev.s.scaled(Rational(k), -1, 1);
    // s_k = -cos(2 pi x)/(2 pi x) + (k/(2 pi x)) h_{k-1}
    p.s = prev.h.scaled(Rational(k), -1, 1) - TrigRational::term(1, -1, Kind::cosine, Rational(1));
    cache.emplace(k, std::move(p));
  }
  return cache.at(n);
}

}  // namespace

const TrigRational& h_closed(int n) {
  if (n < 0) throw std::invalid_argument("h_closed: n must be >= 0");
  return h_pair(n).h;
}

double h_series_eval(int n, double x) {
  if (n < 0) throw std::invalid_argument("h_series_eval: n must be >= 0");
  const double au = 2.0 * std::numbers::pi * std::abs(x);
  if (au < 1.0) {
    // no cancellation to speak of; plain double suffices
    double total = 0.0, term = 1.0;
    const double u2 = au * au;
    for (int m = 0;; ++m) {
      total += term / (n + 2 * m + 1);
      term *= -u2 / ((2 * m + 1) * (2 * m + 2));
      if (std::abs(term) < 1e-19) break;
    }
    return total;
  }
  // alternating terms reach e^{|u|}; widen the floats accordingly
  const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(96 + 1.4427 * au);
  const mpf_class u = 2 * bigfloat::pi(prec) * mpf_class(x, prec);
  const mpf_class u2 = u * u;
  mpf_class total(0, prec), term(1, prec), mag(0, prec);
  mpf_class eps(0, prec);
  mpf_div_2exp(eps.get_mpf_t(), mpf_class(1, prec).get_mpf_t(), prec - 16);
  for (unsigned long m = 0;; ++m) {
    total += term / (n + 2 * m + 1);
    term *= -u2;
    term /= (2 * m + 1) * (2 * m + 2);
    mpf_abs(mag.get_mpf_t(), term.get_mpf_t());
    if (2.0 * static_cast<double>(m) > au && mag < eps) break;
  }
  return total.get_d();
}

double h_quadrature(int n, double x) {
  const double cycles = std::max(4.0, 4.0 * std::abs(x));
  return integrate_panels([n, x](double t) { return std::pow(t, n) * std::cos(2.0 * std::numbers::pi * x * t); },
                          0.0, 1.0, 1.0 / cycles, 12);
}

Rational c_jr(int j, int r) {
  if (j < 1 || j > r) throw std::invalid_argument("c_jr: need 1 <= j <= r");
  return Rational::binomial(r - 1, j - 1) * Rational::binomial(r + j, j - 1) / Rational(j);
}

TrigRational theorem_a_kernel(int r) {
  TrigRational w = TrigRational::constant(Rational(1));
  switch (r) {
    case 1:
      w += TrigRational::term(1, -1, Kind::sine, Rational(-1));
      return w;
    case 2:
      w += TrigRational::term(1, -1, Kind::sine, Rational(1));
      w += TrigRational::term(2, -2, Kind::cosine, Rational(4));
      w += TrigRational::term(2, -2, Kind::constant, Rational(-4));
      return w;
    case 3:
      w += TrigRational::term(1, -1, Kind::sine, Rational(-1));
      // -3 (cos u - 1)/(pi^2 x^2)
      w += TrigRational::term(2, -2, Kind::cosine, Rational(-12));
      w += TrigRational::term(2, -2, Kind::constant, Rational(12));
      // 6 (sin u - u)/(pi^3 x^3)
      w += TrigRational::term(3, -3, Kind::sine, Rational(48));
      w += TrigRational::term(2, -2, Kind::constant, Rational(-48));
      // 3 (cos u - 1 + u^2/2)/(pi^4 x^4)
      w += TrigRational::term(4, -4, Kind::cosine, Rational(48));
      w += TrigRational::term(4, -4, Kind::constant, Rational(-48));
      w += TrigRational::term(2, -2, Kind::constant, Rational(24));
      return w;
    default:
      throw std::invalid_argument("theorem_a_kernel: only r = 1, 2, 3");
  }
}

TrigRational sp_kernel(int r) {
  if (r < 0) throw std::invalid_argument("sp_kernel: r must be >= 0");
  TrigRational w = TrigRational::constant(Rational(1));
  w += TrigRational::term(1, -1, Kind::sine, Rational(-(2 * r + 1)));
  const TrigRational g = TrigRational::term(1, -1, Kind::constant, Rational(1)) -
                         TrigRational::term(1, -1, Kind::cosine, Rational(1));
  for (int j = 1; j <= r; ++j) {
    // r(r+1)/(2^{2j-2} pi^{2j-1}) * c_{j,r}/(2j-1), with the pi powers folded
    // into the (2 pi)-exponent of the exact derivative
    const Rational coeff = Rational(2L * r * (r + 1)) * c_jr(j, r) / Rational(2 * j - 1);
    w += g.derivative(2 * j - 1).scaled(coeff, -(2 * j - 1));
  }
  return w;
}

TrigRational so_even_kernel(int r) {
  if (r < 1) throw std::invalid_argument("so_even_kernel: r must be >= 1");
  return sp_kernel(r - 1);
}

TrigRational u_kernel(int r) {
  if (r < 1) throw std::invalid_argument("u_kernel: r must be >= 1");
  return (so_even_kernel(r) + sp_kernel(r)).scaled(Rational(1, 2));
}

TrigRational conjecture_d_kernel(const BTable& table) {
  const int r = table.r;
  const Rational& b0 = table.at(0);
  if (b0.is_zero()) throw std::invalid_argument("conjecture_d_kernel: b_r(0) vanishes");
  TrigRational w = TrigRational::constant(Rational(1)) + h_closed(0);
  const int j_max = std::min(2 * r - 2, (r * (r - 1)) / 2);
  for (int j = 0; j <= j_max; ++j) {
    const Rational& bj = table.at(j);
    if (bj.is_zero()) continue;
    Rational coeff = Rational(2).pow(j + 1) * bj / (Rational::factorial(static_cast<unsigned long>(j)) * b0);
    if (j % 2 == 1) coeff = -coeff;
    coeff = coeff * Rational(-r);
    w += h_closed(j).scaled(coeff);
  }
  return w;
}

KernelEvaluator::KernelEvaluator(TrigRational f) : f_(std::move(f)) {
  taylor_ = f_.taylor_coefficients(kTaylorOrder);  // throws if singular at 0
  constant_ = f_.constant_term().to_double();
  envelope_ = (f_ - TrigRational::constant(f_.constant_term())).decay_envelope();
}

double KernelEvaluator::operator()(double x) const {
  const double ax = std::abs(x);
  if (ax < kSeriesCrossover) {
    double acc = 0.0;
    for (std::size_t i = taylor_.size(); i-- > 0;) acc = acc * x + taylor_[i];
    return acc;
  }
  if (ax < 1.0) return f_.eval_mp(mpf_class(x, kMidBandBits)).get_d();
  return f_.eval(x);
}

namespace {

TrigRational build_kernel(KernelId id) {
  switch (id.family) {
    case KernelFamily::theorem_a:
      return theorem_a_kernel(id.r);
    case KernelFamily::conjecture_d:
      return conjecture_d_kernel(b_table(id.r));
    case KernelFamily::sp:
      return sp_kernel(id.r);
    case KernelFamily::so_even:
      return so_even_kernel(id.r);
    case KernelFamily::u:
      return u_kernel(id.r);
  }
  throw std::logic_error("build_kernel: bad family");
}

}  // namespace

std::shared_ptr<const KernelEvaluator> kernel_evaluator(KernelId id) {
  static std::map<std::pair<int, int>, std::shared_ptr<const KernelEvaluator>> cache;
  static std::mutex mutex;
  const std::pair<int, int> key{static_cast<int>(id.family), id.r};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<KernelEvaluator>(build_kernel(id))).first;
  return it->second;
}

double w_eval(KernelId id, double x) { return (*kernel_evaluator(id))(x); }

double h_eval(int n, double x) {
  static std::map<int, std::shared_ptr<const KernelEvaluator>> cache;
  static std::mutex mutex;
  std::shared_ptr<const KernelEvaluator> eval;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
      it = cache.emplace(n, std::make_shared<KernelEvaluator>(h_closed(n))).first;
    eval = it->second;
  }
  return (*eval)(x);
}

double w_eval(KernelId id, double x, const BTable& table) {
  if (id.family != KernelFamily::conjecture_d)
    return w_eval(id, x);
  if (table.r != id.r) throw std::invalid_argument("w_eval: b-table r mismatch");
  const KernelEvaluator eval(conjecture_d_kernel(table));
  return eval(x);
}

TestFunctionPair fejer_pair(double delta) {
  if (delta <= 0) throw std::invalid_argument("fejer_pair: delta must be positive");
  TestFunctionPair pair;
  pair.delta = delta;
  pair.phi = [delta](double x) {
    const double t = std::numbers::pi * delta * x;
    if (t == 0.0) return delta;
    const double s = std::sin(t) / t;
    return delta * s * s;
  };
  pair.phi_hat = [delta](double u) { return std::max(0.0, 1.0 - std::abs(u) / delta); };
  pair.phi_envelope = 1.0 / (std::numbers::pi * std::numbers::pi * delta);
  return pair;
}

TestFunctionPair zero_pair(double delta) {
  TestFunctionPair pair;
  pair.delta = delta;
  pair.phi = [](double) { return 0.0; };
  pair.phi_hat = [](double) { return 0.0; };
  pair.phi_envelope = 0.0;
  pair.zero = true;
  return pair;
}

double fejer_hat_moment(double delta, int n) {
  return std::pow(delta, n + 1) / ((n + 1.0) * (n + 2.0));
}

namespace {

// 2 integral_0^T phi * f + certified tail, for |f| <= envelope/|x| at |x| >= 1
double even_tail_integral(const TestFunctionPair& pair, const std::function<double(double)>& f,
                          double envelope, double* tail_bound) {
  if (pair.zero) {
    if (tail_bound) *tail_bound = 0.0;
    return 0.0;
  }
  constexpr double kTailTarget = 1e-10;
  const double T = std::clamp(std::sqrt(pair.phi_envelope * envelope / kTailTarget), 50.0, 5.0e5);
  const double tail = pair.phi_envelope * envelope / (T * T);  // both half-lines
  if (tail_bound) *tail_bound = tail;
  const double value = integrate_panels([&](double x) { return pair.phi(x) * f(x); }, 0.0, T, 0.25, 16);
  return 2.0 * value;
}

}  // namespace

FourierIdentity fourier_moment_identity_check(const TestFunctionPair& pair, int n) {
  if (n < 0) throw std::invalid_argument("fourier_moment_identity_check: n must be >= 0");
  if (!(pair.delta < 1.0))
    throw std::invalid_argument("fourier_moment_identity_check: needs support radius < 1");
  FourierIdentity out;
  out.lhs = integrate_adaptive([&](double u) { return pair.phi_hat(u) * std::pow(u, n); },
                               0.0, pair.delta, 1e-13).value;
  const double envelope = h_closed(n).decay_envelope();
  out.rhs = even_tail_integral(pair, [n](double x) { return h_eval(n, x); }, envelope, &out.tail_bound);
  out.converged = out.tail_bound < 1e-9;
  return out;
}

namespace {

QuadResult density_functional_impl(const KernelEvaluator& w, const TestFunctionPair& pair) {
  QuadResult out;
  if (pair.zero) return out;
  const double c0 = w.constant_part();
  double tail = 0.0;
  const double varying =
      even_tail_integral(pair, [&](double x) { return w(x) - c0; }, w.decay_envelope(), &tail);
  out.value = c0 * pair.phi_hat(0.0) + varying;
  out.error = tail;
  out.converged = tail < 1e-9;
  return out;
}

}  // namespace

QuadResult density_functional(KernelId id, const TestFunctionPair& pair) {
  return density_functional_impl(*kernel_evaluator(id), pair);
}

QuadResult density_functional(KernelId id, const TestFunctionPair& pair, const BTable& table) {
  if (id.family != KernelFamily::conjecture_d) return density_functional(id, pair);
  if (table.r != id.r) throw std::invalid_argument("density_functional: b-table r mismatch");
  const KernelEvaluator eval(conjecture_d_kernel(table));
  return density_functional_impl(eval, pair);
}

}  // namespace wld
