#ifndef WLD_LINALG_HPP
#define WLD_LINALG_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace wld {

struct Matrix {
  int n = 0;
  std::vector<double> a;  // row-major n x n

  Matrix() = default;
  explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static Matrix identity(int size);
  Matrix transposed() const;
  Matrix multiplied(const Matrix& o) const;
  double max_abs_diff(const Matrix& o) const;
};

// Householder QR with the R-diagonal sign normalization; returns Q and the
// sign of det(Q). Throws on a degenerate (exactly rank-deficient) input.
struct QrOrthogonal {
  Matrix q;
  int det_sign = 1;
};
QrOrthogonal qr_orthonormal(Matrix a);

// eigenvalues of a symmetric matrix (tridiagonalization + implicit-shift QL),
// ascending
std::vector<double> symmetric_eigenvalues(Matrix a);

// eigenvalues of a general real matrix via Hessenberg reduction and the
// double-shift QR iteration
std::vector<std::complex<double>> general_eigenvalues(Matrix a);

// deterministic splittable generator: xoshiro256++ seeded via splitmix64
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next_u64();
  double next_unit();      // uniform in (0, 1)
  double next_gaussian();  // Box-Muller, no rejection

 private:
  std::uint64_t s_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wld

#endif
