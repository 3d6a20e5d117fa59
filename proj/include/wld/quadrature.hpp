#ifndef WLD_QUADRATURE_HPP
#define WLD_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace wld {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  bool converged = true;
};

// process-wide default relative tolerance for adaptive quadrature; the CLI
// exposes it as --rel-tol
double& default_quad_rel_tol();

// nodes/weights on [-1, 1], cached per order
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre_rule(int order);

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order = 16);

// adaptive bisection with panel-doubling error estimate
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol = 1e-12, int order = 16, int max_depth = 40);

// composite fixed-width panels; suited to smooth oscillatory integrands
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double panel_width, int order = 16);

}  // namespace wld

#endif
