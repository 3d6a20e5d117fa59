#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>

#include "wld/rmt.hpp"
#include "wld/threads.hpp"

using namespace wld;

TEST_CASE("sampled matrices are special orthogonal") {
  Rng rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix u = sample_so_even(6, rng);
    CHECK(u.transposed().multiplied(u).max_abs_diff(Matrix::identity(12)) < 1e-10);
    // det = +1: product of all eigenvalues
    std::complex<double> det{1.0, 0.0};
    for (const auto& z : general_eigenvalues(u)) det *= z;
    CHECK(det.real() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(det.imag()) < 1e-8);
    // det = +1: the product over conjugate pairs of unit-modulus eigenvalues
    const auto angles = eigenangles_symmetric(u);
    CHECK(angles.size() == 6);
    // every angle in (0, pi); weight is nonnegative
    for (double t : angles) {
      CHECK(t >= 0.0);
      CHECK(t <= 3.14159265358979 + 1e-12);
    }
    CHECK(spectral_weight(angles) >= 0.0);
  }
}

TEST_CASE("haar symmetry: entries average to zero") {
  Rng rng(17);
  double mean = 0.0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) mean += sample_so_even(2, rng)(0, 0);
  mean /= samples;
  // entry variance is 1/(2N) = 1/4; four standard errors
  CHECK(std::abs(mean) < 4.0 * std::sqrt(0.25 / samples));
}

TEST_CASE("schur and symmetric routes agree") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix u = sample_so_even(5, rng);
    const auto a = eigenangles_symmetric(u);
    const auto b = eigenangles_schur(u);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(std::cos(a[i]) == doctest::Approx(std::cos(b[i])).epsilon(1e-8));
  }
}

TEST_CASE("weight is invariant under orthogonal conjugation") {
  Rng rng(77);
  const Matrix u = sample_so_even(4, rng);
  const double w = spectral_weight(eigenangles_symmetric(u));
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix v = sample_so_even(4, rng);
    const Matrix conj = v.multiplied(u).multiplied(v.transposed());
    const double w2 = spectral_weight(eigenangles_symmetric(conj));
    CHECK(w2 == doctest::Approx(w).epsilon(1e-8));
  }
}

TEST_CASE("thread count resolution prefers flag, then environment") {
  CHECK(resolve_thread_count(3) == 3);
  setenv("WLD_THREADS", "2", 1);
  CHECK(resolve_thread_count(0) == 2);
  CHECK(resolve_thread_count(5) == 5);
  unsetenv("WLD_THREADS");
  CHECK(resolve_thread_count(0) >= 1);
}

TEST_CASE("estimates are deterministic and thread-count independent") {
  RmtConfig config;
  config.N = 4;
  config.samples = 400;
  config.r = 1;
  config.seed = 99;
  config.pair = fejer_pair(0.5);
  config.threads = 1;
  const RmtEstimate a = weighted_one_level(config);
  const RmtEstimate b = weighted_one_level(config);
  CHECK(a.weighted_mean == b.weighted_mean);
  CHECK(a.std_error == b.std_error);
  config.threads = 3;
  const RmtEstimate c = weighted_one_level(config);
  CHECK(std::abs(a.weighted_mean - c.weighted_mean) < 1e-12);
}

TEST_CASE("unweighted run reduces to the plain ensemble") {
  RmtConfig config;
  config.N = 32;
  config.samples = 2500;
  config.r = 0;
  config.seed = 7;
  config.pair = fejer_pair(0.5);
  config.threads = 2;
  const RmtEstimate est = weighted_one_level(config);
  CHECK(std::isfinite(est.weighted_mean));
  CHECK(est.std_error > 0.0);
  // plain SO(even) reference; generous band for size-32 blocks
  CHECK(std::abs(est.weighted_mean - est.reference) < 5.0 * est.std_error + 0.06);
}

TEST_CASE("small weighted run stays near the kernel prediction") {
  RmtConfig config;
  config.N = 24;
  config.samples = 8000;
  config.r = 1;
  config.seed = 12;
  config.pair = fejer_pair(0.5);
  config.threads = 2;
  const RmtEstimate est = weighted_one_level(config);
  CHECK(std::abs(est.weighted_mean - est.reference) < 4.0 * est.std_error + 0.05);
}
