#ifndef WLD_KERNELS_HPP
#define WLD_KERNELS_HPP

#include <functional>
#include <memory>

#include "wld/quadrature.hpp"
#include "wld/rational.hpp"
#include "wld/residues.hpp"
#include "wld/trig_rational.hpp"

namespace wld {

// ---- h_n = integral_0^1 t^n cos(2 pi x t) dt ----

// closed form by the integration-by-parts recurrence, cached per n
const TrigRational& h_closed(int n);

// everywhere-convergent series sum_m (-1)^m (2 pi x)^{2m} / ((2m)! (n+2m+1)),
// summed in wide-enough floats to survive the cancellation at large |x|
double h_series_eval(int n, double x);

// direct quadrature of the defining integral (oracle route)
double h_quadrature(int n, double x);

// production evaluator: series below the crossover, closed form above
double h_eval(int n, double x);

inline constexpr double kSeriesCrossover = 0.05;

// ---- density kernels ----

enum class KernelFamily { theorem_a, conjecture_d, sp, so_even, u };

struct KernelId {
  KernelFamily family;
  int r;
};

Rational c_jr(int j, int r);  // (1/j) C(r-1, j-1) C(r+j, j-1)

TrigRational theorem_a_kernel(int r);                   // r in {1,2,3}, printed closed forms
TrigRational sp_kernel(int r);                          // r >= 0
TrigRational so_even_kernel(int r);                     // r >= 1, = sp_kernel(r-1)
TrigRational u_kernel(int r);                           // (so_even + sp)/2
TrigRational conjecture_d_kernel(const BTable& table);  // 1 + h_0 - r sum_j ...

// closed form + Taylor series with a precision-aware middle band
class KernelEvaluator {
 public:
  explicit KernelEvaluator(TrigRational f);
  double operator()(double x) const;
  double decay_envelope() const { return envelope_; }
  double constant_part() const { return constant_; }
  double value_at_zero() const { return taylor_[0]; }
  const TrigRational& form() const { return f_; }

 private:
  TrigRational f_;
  std::vector<double> taylor_;
  double envelope_ = 0.0;
  double constant_ = 0.0;
};

// shared, cached per (family, r); conjecture_d builds its own b-table
std::shared_ptr<const KernelEvaluator> kernel_evaluator(KernelId id);

double w_eval(KernelId id, double x);
double w_eval(KernelId id, double x, const BTable& table);  // conjecture_d with caller's table

// ---- test functions ----

struct TestFunctionPair {
  double delta = 0.5;
  std::function<double(double)> phi;      // even Schwartz function
  std::function<double(double)> phi_hat;  // even, supported in [-delta, delta]
  double phi_envelope = 0.0;              // |phi(x)| <= phi_envelope / x^2
  bool zero = false;
};

// phi(x) = delta (sin(pi delta x)/(pi delta x))^2, hat = (1-|u|/delta)_+
TestFunctionPair fejer_pair(double delta);
TestFunctionPair zero_pair(double delta = 0.5);

// exact integral_0^delta (1-u/delta) u^n du = delta^{n+1}/((n+1)(n+2))
double fejer_hat_moment(double delta, int n);

struct FourierIdentity {
  double lhs = 0.0;  // integral_0^inf hat(u) u^n du
  double rhs = 0.0;  // integral_R phi(x) h_n(x) dx
  double tail_bound = 0.0;
  bool converged = true;
};

// the moment-transfer identity between the two sides; requires delta < 1
FourierIdentity fourier_moment_identity_check(const TestFunctionPair& pair, int n);

// integral_R phi(x) W(x) dx with certified truncation of the x-integral
QuadResult density_functional(KernelId id, const TestFunctionPair& pair);
QuadResult density_functional(KernelId id, const TestFunctionPair& pair, const BTable& table);

}  // namespace wld

#endif
