#ifndef WLD_TRUNCPOLY_HPP
#define WLD_TRUNCPOLY_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "wld/rational.hpp"

namespace wld {

// Multivariate polynomial over Rational with a hard per-variable exponent cap.
// Multiplication drops every product monomial whose exponent in some variable
// exceeds the cap; callers size the cap so that no monomial they later extract
// is ever lost. Exponent vectors are packed 5 bits per variable into a 64-bit
// key, so nvars <= 12 and cap <= 31.
class TruncPoly {
 public:
  static constexpr int kMaxVars = 12;
  static constexpr int kMaxCap = 31;

  TruncPoly(int nvars, int cap);

  int nvars() const { return nvars_; }
  int cap() const { return cap_; }
  std::size_t term_count() const { return terms_.size(); }

  static TruncPoly constant(int nvars, int cap, const Rational& c);
  // c * z_var^e
  static TruncPoly monomial(int nvars, int cap, int var, int e, const Rational& c);
  // Vandermonde discriminant over the given variables at the given power:
  // prod_{i<j} (z_{v_j}^power - z_{v_i}^power); 1 when fewer than two variables.
  static TruncPoly vandermonde(int nvars, int cap, std::span<const int> vars, int power);
  static TruncPoly vandermonde(int nvars, int cap, int power);  // all variables
  // sum_{m=0}^{cap} z_var^m / m!
  static TruncPoly truncated_exp(int nvars, int cap, int var);

  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  TruncPoly operator*(const TruncPoly& o) const;
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }

  void scale(const Rational& c);
  // multiply by z_var^e in place
  void shift(int var, int e);

  Rational coefficient(std::span<const int> exponents) const;

  // sum over monomials of coeff(m) * f(m); used to pair against e^{z_1+...+z_r}
  template <typename F>
  void for_each_term(F&& f) const {
    std::vector<int> e(static_cast<std::size_t>(nvars_));
    for (const auto& [key, c] : terms_) {
      unpack(key, e);
      f(e, c);
    }
  }

 private:
  static std::uint64_t pack(std::span<const int> e);
  void unpack(std::uint64_t key, std::vector<int>& e) const;
  void add_term(std::uint64_t key, const Rational& c);

  int nvars_;
  int cap_;
  std::unordered_map<std::uint64_t, Rational> terms_;
};

}  // namespace wld

#endif
