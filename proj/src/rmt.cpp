#include "wld/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wld/threads.hpp"

namespace wld {

Matrix sample_so_even(int N, Rng& rng) {
  if (N < 2) throw std::invalid_argument("sample_so_even: N must be >= 2");
  const int n = 2 * N;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Matrix g(n);
    for (double& x : g.a) x = rng.next_gaussian();
    try {
      QrOrthogonal qr = qr_orthonormal(std::move(g));
      if (qr.det_sign < 0)
        for (int j = 0; j < n; ++j) qr.q(0, j) = -qr.q(0, j);
      return std::move(qr.q);
    } catch (const std::runtime_error&) {
      // degenerate draw; resample
    }
  }
  throw std::runtime_error("sample_so_even: repeated degenerate draws");
}

std::vector<double> eigenangles_symmetric(const Matrix& u) {
  const int n = u.n;
  if (n % 2 != 0) throw std::invalid_argument("eigenangles_symmetric: odd size");
  Matrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = 0.5 * (u(i, j) + u(j, i));
  std::vector<double> ev = symmetric_eigenvalues(std::move(s));
  // cos(theta) each with multiplicity two
  std::vector<double> angles(static_cast<std::size_t>(n / 2));
  for (int j = 0; j < n / 2; ++j) {
    const double a = ev[static_cast<std::size_t>(2 * j)];
    const double b = ev[static_cast<std::size_t>(2 * j + 1)];
    if (std::abs(a - b) > 1e-7)
      throw std::runtime_error("eigenangles_symmetric: spectrum not doubled");
    angles[static_cast<std::size_t>(j)] = std::acos(std::clamp(0.5 * (a + b), -1.0, 1.0));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::vector<double> eigenangles_schur(const Matrix& u) {
  const int n = u.n;
  if (n % 2 != 0) throw std::invalid_argument("eigenangles_schur: odd size");
  const auto ev = general_eigenvalues(u);
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(n / 2));
  int real_plus = 0, real_minus = 0;
  for (const auto& z : ev) {
    if (z.imag() > 0.0)
      angles.push_back(std::atan2(z.imag(), z.real()));
    else if (z.imag() == 0.0)
      ++(z.real() < 0.0 ? real_minus : real_plus);
  }
  // real eigenvalues of a rotation are ±1 with even multiplicity: one angle
  // (0 or pi) per pair
  for (int k = 0; k < real_minus / 2; ++k) angles.push_back(std::numbers::pi);
  for (int k = 0; k < real_plus / 2; ++k) angles.push_back(0.0);
  std::sort(angles.begin(), angles.end());
  if (static_cast<int>(angles.size()) != n / 2)
    throw std::runtime_error("eigenangles_schur: unexpected real spectrum");
  return angles;
}

double spectral_weight(const std::vector<double>& angles) {
  double w = 1.0;
  for (double t : angles) w *= 2.0 - 2.0 * std::cos(t);
  return w;
}

namespace {

double plain_so_even_reference(const TestFunctionPair& pair) {
  if (pair.zero) return 0.0;
  // unweighted SO(even) kernel 1 + sin(2 pi x)/(2 pi x)
  const TrigRational w = TrigRational::constant(Rational(1)) +
                         TrigRational::term(1, -1, TrigRational::Kind::sine, Rational(1));
  const KernelEvaluator eval(w);
  const double c0 = eval.constant_part();
  const double T = 5.0e4;
  const double value =
      2.0 * integrate_panels([&](double x) { return pair.phi(x) * (eval(x) - c0); }, 0.0, T, 0.25, 16);
  return c0 * pair.phi_hat(0.0) + value;
}

}  // namespace

std::vector<RmtEstimate> weighted_one_level_multi(const RmtConfig& config,
                                                  const std::vector<int>& exponents) {
  if (config.N < 2 || config.samples < 1)
    throw std::invalid_argument("weighted_one_level: bad configuration");
  for (int r : exponents)
    if (r < 0) throw std::invalid_argument("weighted_one_level: weight exponent must be >= 0");
  const long M = config.samples;
  const int threads = resolve_thread_count(config.threads);
  const double scale = static_cast<double>(config.N) / std::numbers::pi;

  std::vector<double> base_weights(static_cast<std::size_t>(M));
  std::vector<double> stats(static_cast<std::size_t>(M));
  parallel_for(M, threads, [&](long i) {
    // substream derived from (seed, index): independent of scheduling
    Rng rng(config.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
    const Matrix u = sample_so_even(config.N, rng);
    const std::vector<double> angles = eigenangles_symmetric(u);
    double s = 0.0;
    for (double t : angles) s += config.pair.phi(t * scale);
    base_weights[static_cast<std::size_t>(i)] = spectral_weight(angles);
    stats[static_cast<std::size_t>(i)] = 2.0 * s;  // both members ±theta of each pair
  });

  std::vector<RmtEstimate> out;
  out.reserve(exponents.size());
  for (int r : exponents) {
    double sw = 0.0, sws = 0.0;
    const int B = static_cast<int>(std::min<long>(100, M));
    std::vector<double> bw(static_cast<std::size_t>(B), 0.0), bws(static_cast<std::size_t>(B), 0.0);
    for (long i = 0; i < M; ++i) {
      double w = 1.0;
      for (int k = 0; k < r; ++k) w *= base_weights[static_cast<std::size_t>(i)];
      sw += w;
      sws += w * stats[static_cast<std::size_t>(i)];
      const int b = static_cast<int>(i * B / M);
      bw[static_cast<std::size_t>(b)] += w;
      bws[static_cast<std::size_t>(b)] += w * stats[static_cast<std::size_t>(i)];
    }
    if (sw == 0.0) throw std::runtime_error("weighted_one_level: total weight vanished");

    RmtEstimate est;
    est.weighted_mean = sws / sw;

    // jackknife over 100 contiguous blocks
    double mean = 0.0;
    std::vector<double> loo(static_cast<std::size_t>(B));
    for (int b = 0; b < B; ++b) {
      const double d = sw - bw[static_cast<std::size_t>(b)];
      loo[static_cast<std::size_t>(b)] = d != 0.0 ? (sws - bws[static_cast<std::size_t>(b)]) / d : est.weighted_mean;
      mean += loo[static_cast<std::size_t>(b)];
    }
    mean /= B;
    double var = 0.0;
    for (int b = 0; b < B; ++b) {
      const double d = loo[static_cast<std::size_t>(b)] - mean;
      var += d * d;
    }
    est.std_error = M > 1 ? std::sqrt(var * (B - 1) / B) : 0.0;

    est.reference = r >= 1 ? density_functional({KernelFamily::so_even, r}, config.pair).value
                           : plain_so_even_reference(config.pair);
    est.z_score = est.std_error > 0.0 ? (est.weighted_mean - est.reference) / est.std_error : 0.0;
    out.push_back(est);
  }
  return out;
}

RmtEstimate weighted_one_level(const RmtConfig& config) {
  return weighted_one_level_multi(config, {config.r}).front();
}

}  // namespace wld
