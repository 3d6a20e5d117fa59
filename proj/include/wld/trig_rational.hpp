#ifndef WLD_TRIG_RATIONAL_HPP
#define WLD_TRIG_RATIONAL_HPP

#include <map>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "wld/rational.hpp"

namespace wld {

// Finite combinations  sum  c * (2*pi)^k * x^(-m) * {1, cos(2*pi*x), sin(2*pi*x)}
// with exact Rational c. Negative m gives the polynomial part. Closed under
// d/dx, which is taken exactly. This is the carrier for every closed-form
// kernel and for the h_n family.
class TrigRational {
 public:
  enum class Kind { constant, cosine, sine };

  struct Key {
    int inv_pow;    // m in x^(-m)
    int twopi_pow;  // k in (2*pi)^k
    Kind kind;
    auto operator<=>(const Key&) const = default;
  };

  TrigRational() = default;

  static TrigRational term(int inv_pow, int twopi_pow, Kind kind, const Rational& c);
  static TrigRational constant(const Rational& c) { return term(0, 0, Kind::constant, c); }

  TrigRational& operator+=(const TrigRational& o);
  TrigRational& operator-=(const TrigRational& o);
  friend TrigRational operator+(TrigRational a, const TrigRational& b) { return a += b; }
  friend TrigRational operator-(TrigRational a, const TrigRational& b) { return a -= b; }

  // multiply by c * (2*pi)^twopi_shift * x^(-inv_shift)
  TrigRational scaled(const Rational& c, int twopi_shift = 0, int inv_shift = 0) const;

  TrigRational derivative() const;           // d/dx, exact
  TrigRational derivative(int order) const;  // order >= 1

  double eval(double x) const;                       // |x| not tiny
  mpf_class eval_mp(const mpf_class& x) const;       // |2*pi*x| < ~4*pi

  // Exact Taylor/Laurent data around 0: coefficient of x^p is
  // sum_k bucket[p][k] * (2*pi)^k. Buckets with p < 0 must all cancel for a
  // function regular at 0 (the check is exact: powers of pi are independent
  // over Q).
  using SeriesBuckets = std::map<int, std::map<int, Rational>>;
  SeriesBuckets series_buckets(int max_power) const;
  bool regular_at_zero() const;
  // double coefficients of x^0..x^max_power (throws if not regular at 0)
  std::vector<double> taylor_coefficients(int max_power) const;

  // all sine carriers at odd m and cosine/constant carriers at even m
  bool structurally_even() const;

  // C with |f(x) - constant_term| <= C / |x| for |x| >= 1
  double decay_envelope() const;
  Rational constant_term() const;

  const std::map<Key, Rational>& terms() const { return terms_; }

 private:
  void add_term(const Key& k, const Rational& c);
  std::map<Key, Rational> terms_;
};

}  // namespace wld

#endif
