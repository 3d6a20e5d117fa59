#include "wld/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wld {

Matrix Matrix::identity(int size) {
  Matrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::multiplied(const Matrix& o) const {
  Matrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double v = (*this)(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += v * o(k, j);
    }
  return out;
}

double Matrix::max_abs_diff(const Matrix& o) const {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - o.a[i]));
  return m;
}

QrOrthogonal qr_orthonormal(Matrix a) {
  const int n = a.n;
  std::vector<std::vector<double>> reflectors;
  reflectors.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n - 1; ++k) {
    double norm2 = 0.0;
    for (int i = k; i < n; ++i) norm2 += a(i, k) * a(i, k);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) throw std::runtime_error("qr_orthonormal: degenerate column");
    const double alpha = a(k, k) >= 0.0 ? -norm : norm;
    std::vector<double> v(static_cast<std::size_t>(n - k));
    v[0] = a(k, k) - alpha;
    for (int i = k + 1; i < n; ++i) v[static_cast<std::size_t>(i - k)] = a(i, k);
    double vv = 0.0;
    for (double x : v) vv += x * x;
    if (vv == 0.0) throw std::runtime_error("qr_orthonormal: zero reflector");
    const double beta = 2.0 / vv;
    for (int j = k; j < n; ++j) {
      double dot = 0.0;
      for (int i = k; i < n; ++i) dot += v[static_cast<std::size_t>(i - k)] * a(i, j);
      dot *= beta;
      for (int i = k; i < n; ++i) a(i, j) -= dot * v[static_cast<std::size_t>(i - k)];
    }
    reflectors.push_back(std::move(v));
  }

  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (a(j, j) == 0.0) throw std::runtime_error("qr_orthonormal: zero diagonal");
    signs[static_cast<std::size_t>(j)] = a(j, j) > 0.0 ? 1 : -1;
  }

  // backward accumulation of Q = H_0 ... H_{n-2}
  Matrix q = Matrix::identity(n);
  for (int k = n - 2; k >= 0; --k) {
    const std::vector<double>& v = reflectors[static_cast<std::size_t>(k)];
    double vv = 0.0;
    for (double x : v) vv += x * x;
    const double beta = 2.0 / vv;
    for (int j = k; j < n; ++j) {
      double dot = 0.0;
      for (int i = k; i < n; ++i) dot += v[static_cast<std::size_t>(i - k)] * q(i, j);
      dot *= beta;
      for (int i = k; i < n; ++i) q(i, j) -= dot * v[static_cast<std::size_t>(i - k)];
    }
  }

  int det = (n - 1) % 2 == 0 ? 1 : -1;  // each reflector has determinant -1
  for (int j = 0; j < n; ++j) {
    det *= signs[static_cast<std::size_t>(j)];
    if (signs[static_cast<std::size_t>(j)] < 0)
      for (int i = 0; i < n; ++i) q(i, j) = -q(i, j);
  }
  return {std::move(q), det};
}

namespace {

// symmetric tridiagonalization, values-only (EISPACK tred1 lineage)
void tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
  const int n = a.n;
  d.assign(static_cast<std::size_t>(n), 0.0);
  e.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[static_cast<std::size_t>(i)] = a(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[static_cast<std::size_t>(i)] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[static_cast<std::size_t>(j)] = g / h;
          f += e[static_cast<std::size_t>(j)] * a(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a(i, j);
          e[static_cast<std::size_t>(j)] = g = e[static_cast<std::size_t>(j)] - hh * f;
          for (int k = 0; k <= j; ++k)
            a(j, k) -= f * e[static_cast<std::size_t>(k)] + g * a(i, k);
        }
      }
    } else {
      e[static_cast<std::size_t>(i)] = a(i, l);
    }
    d[static_cast<std::size_t>(i)] = h;
  }
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = a(i, i);
}

// Sturm-count bisection on a symmetric tridiagonal: count(x) is the number of
// eigenvalues below x from the signs of the LDL^T pivots, monotone in x, so
// each eigenvalue is bracketed unconditionally. e[i] couples rows i-1 and i.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  const std::size_t n = d.size();
  int count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    double denom = q;
    if (std::abs(denom) < 1e-300) denom = denom < 0.0 ? -1e-300 : 1e-300;
    q = d[i] - x - e[i] * e[i] / denom;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> sturm_eigenvalues(const std::vector<double>& d, const std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  double lo = d[0], hi = d[0];
  for (int i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(e[static_cast<std::size_t>(i)]) : 0.0) +
                          (i + 1 < n ? std::abs(e[static_cast<std::size_t>(i + 1)]) : 0.0);
    lo = std::min(lo, d[static_cast<std::size_t>(i)] - radius);
    hi = std::max(hi, d[static_cast<std::size_t>(i)] + radius);
  }
  const double pad = 1e-12 * (1.0 + std::abs(lo) + std::abs(hi));
  lo -= pad;
  hi += pad;
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (b - a <= 4.0 * 2.3e-16 * std::max({1.0, std::abs(a), std::abs(b)})) break;
      if (sturm_count(d, e, mid) <= k)
        a = mid;
      else
        b = mid;
    }
    out[static_cast<std::size_t>(k)] = 0.5 * (a + b);
    lo = out[static_cast<std::size_t>(k)];  // eigenvalues come out ascending
  }
  return out;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(Matrix a) {
  std::vector<double> d, e;
  tridiagonalize(a, d, e);
  return sturm_eigenvalues(d, e);
}

namespace {

// Hessenberg reduction by Householder similarity
void hessenberg(Matrix& a) {
  const int n = a.n;
  for (int k = 1; k < n - 1; ++k) {
    double norm2 = 0.0;
    for (int i = k; i < n; ++i) norm2 += a(i, k - 1) * a(i, k - 1);
    if (norm2 == 0.0) continue;
    const double norm = std::sqrt(norm2);
    const double alpha = a(k, k - 1) >= 0.0 ? -norm : norm;
    std::vector<double> v(static_cast<std::size_t>(n - k), 0.0);
    v[0] = a(k, k - 1) - alpha;
    for (int i = k + 1; i < n; ++i) v[static_cast<std::size_t>(i - k)] = a(i, k - 1);
    double vv = 0.0;
    for (double x : v) vv += x * x;
    if (vv == 0.0) continue;
    const double beta = 2.0 / vv;
    // A := H A
    for (int j = k - 1; j < n; ++j) {
      double dot = 0.0;
      for (int i = k; i < n; ++i) dot += v[static_cast<std::size_t>(i - k)] * a(i, j);
      dot *= beta;
      for (int i = k; i < n; ++i) a(i, j) -= dot * v[static_cast<std::size_t>(i - k)];
    }
    // A := A H
    for (int i = 0; i < n; ++i) {
      double dot = 0.0;
      for (int j = k; j < n; ++j) dot += v[static_cast<std::size_t>(j - k)] * a(i, j);
      dot *= beta;
      for (int j = k; j < n; ++j) a(i, j) -= dot * v[static_cast<std::size_t>(j - k)];
    }
  }
}

// double-shift QR on an upper Hessenberg matrix (EISPACK hqr lineage),
// eigenvalues only
std::vector<std::complex<double>> hqr_eigenvalues(Matrix& a) {
  const int n = a.n;
  std::vector<std::complex<double>> wri(static_cast<std::size_t>(n));
  const auto sign_of = [](double mag, double ref) { return ref >= 0.0 ? std::abs(mag) : -std::abs(mag); };
  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
  int nn = n - 1;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        wri[static_cast<std::size_t>(nn--)] = x + t;
      } else {
        double y = a(nn - 1, nn - 1);
        double w2 = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          const double p = 0.5 * (y - x);
          const double q = p * p + w2;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wri[static_cast<std::size_t>(nn - 1)] = x + z;
            wri[static_cast<std::size_t>(nn)] = z != 0.0 ? x - w2 / z : x + z;
          } else {
            wri[static_cast<std::size_t>(nn - 1)] = std::complex<double>(x + p, z);
            wri[static_cast<std::size_t>(nn)] = std::complex<double>(x + p, -z);
          }
          nn -= 2;
        } else {
          if (its == 30) throw std::runtime_error("hqr_eigenvalues: no convergence");
          if (its == 10 || its == 20) {
            t += x;
            for (int i = 0; i <= nn; ++i) a(i, i) -= x;
            const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w2 = -0.4375 * s * s;
          }
          ++its;
          double p = 0.0, q = 0.0, r = 0.0;
          int m = 0;
          for (m = nn - 2; m >= l; --m) {
            const double z = a(m, m);
            const double rr = x - z;
            const double ss = y - z;
            p = (rr * ss - w2) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - rr - ss;
            r = a(m + 2, m + 1);
            const double scale = std::abs(p) + std::abs(q) + std::abs(r);
            p /= scale;
            q /= scale;
            r /= scale;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = k != nn - 1 ? a(k + 2, k - 1) : 0.0;
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            const double z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              double pp = a(k, j) + q * a(k + 1, j);
              if (k != nn - 1) {
                pp += r * a(k + 2, j);
                a(k + 2, j) -= pp * z;
              }
              a(k + 1, j) -= pp * y;
              a(k, j) -= pp * x;
            }
            const int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              double pp = x * a(i, k) + y * a(i, k + 1);
              if (k != nn - 1) {
                pp += z * a(i, k + 2);
                a(i, k + 2) -= pp * r;
              }
              a(i, k + 1) -= pp * q;
              a(i, k) -= pp;
            }
          }
        }
      }
    } while (nn >= 0 && l < nn - 1);
  }
  return wri;
}

}  // namespace

std::vector<std::complex<double>> general_eigenvalues(Matrix a) {
  hessenberg(a);
  return hqr_eigenvalues(a);
}

Rng::Rng(std::uint64_t seed) {
  // splitmix64 expansion of the seed into the xoshiro state
  std::uint64_t x = seed;
  for (auto& word : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    word = z ^ (z >> 31);
  }
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::next_unit() {
  // 53 random bits into (0, 1)
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace wld
