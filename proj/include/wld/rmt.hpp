#ifndef WLD_RMT_HPP
#define WLD_RMT_HPP

#include <cstdint>

#include "wld/kernels.hpp"
#include "wld/linalg.hpp"

namespace wld {

struct RmtConfig {
  int N = 40;                 // matrix size 2N
  long samples = 200000;
  int r = 1;                  // weight exponent, det(I-U)^r; r = 0 is unweighted
  std::uint64_t seed = 1;
  TestFunctionPair pair = fejer_pair(0.5);
  int threads = 0;            // 0: resolve from WLD_THREADS / hardware
};

struct RmtEstimate {
  double weighted_mean = 0.0;
  double std_error = 0.0;  // jackknife over 100 blocks
  double reference = 0.0;  // integral phi W_SOeven^r (r >= 1), plain SO(even) at r = 0
  double z_score = 0.0;
};

// Haar-distributed element of SO(2N): Gaussian matrix -> QR with R-diagonal
// sign normalization -> reflection fix when det = -1
Matrix sample_so_even(int N, Rng& rng);

// the N angles in (0, pi), one per conjugate pair, via the real spectrum of
// (U + U^T)/2
std::vector<double> eigenangles_symmetric(const Matrix& u);

// independent route: angles from the eigenvalues of U itself
std::vector<double> eigenangles_schur(const Matrix& u);

// det(I - U) as prod_j (2 - 2 cos theta_j) over conjugate pairs
double spectral_weight(const std::vector<double>& angles);

// E[w^r sum_{±theta} phi(theta N / pi)] / E[w^r] with deterministic
// per-sample substreams; bit-identical for a fixed seed at any thread count
RmtEstimate weighted_one_level(const RmtConfig& config);

// same ensemble evaluated at several weight exponents (config.r is ignored);
// the draws are shared, the per-exponent estimators are as above
std::vector<RmtEstimate> weighted_one_level_multi(const RmtConfig& config,
                                                  const std::vector<int>& exponents);

}  // namespace wld

#endif
