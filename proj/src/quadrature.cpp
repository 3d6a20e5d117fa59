#include "wld/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wld {

double& default_quad_rel_tol() {
  static double tol = 1e-12;
  return tol;
}

namespace {

GaussRule build_rule(int n) {
  // Newton iteration on P_n with the Chebyshev-angle starting guess
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre_rule(int order) {
  if (order < 2 || order > 128) throw std::invalid_argument("gauss_legendre_rule: bad order");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
  const GaussRule& rule = gauss_legendre_rule(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    total += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return total * half;
}

namespace {

void adapt(const std::function<double(double)>& f, double a, double b, double whole,
           double tol, int order, int depth, QuadResult& out) {
  const double mid = 0.5 * (a + b);
  const double left = integrate_gl(f, a, mid, order);
  const double right = integrate_gl(f, mid, b, order);
  const double diff = left + right - whole;
  // rounding floor: refining below the local noise level cannot converge
  const double floor = 32.0 * 2.3e-16 * (std::abs(left) + std::abs(right)) + 1e-305;
  if (std::abs(diff) <= std::max(tol, floor) || depth <= 0) {
    out.value += left + right;
    out.error += std::abs(diff);
    if (depth <= 0 && std::abs(diff) > std::max(tol, floor)) out.converged = false;
    return;
  }
  adapt(f, a, mid, left, 0.5 * tol, order, depth - 1, out);
  adapt(f, mid, b, right, 0.5 * tol, order, depth - 1, out);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, int order, int max_depth) {
  const double whole = integrate_gl(f, a, b, order);
  const double scale = std::max({std::abs(whole), 1e-30});
  QuadResult out;
  adapt(f, a, b, whole, rel_tol * scale, order, max_depth, out);
  return out;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double panel_width, int order) {
  if (panel_width <= 0) throw std::invalid_argument("integrate_panels: bad width");
  const long n = std::max(1L, static_cast<long>(std::ceil((b - a) / panel_width)));
  const double h = (b - a) / static_cast<double>(n);
  double total = 0.0;
  for (long i = 0; i < n; ++i)
    total += integrate_gl(f, a + static_cast<double>(i) * h, a + static_cast<double>(i + 1) * h, order);
  return total;
}

}  // namespace wld
