#include "wld/trig_rational.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wld/bigfloat.hpp"

namespace wld {

TrigRational TrigRational::term(int inv_pow, int twopi_pow, Kind kind, const Rational& c) {
  TrigRational t;
  t.add_term({inv_pow, twopi_pow, kind}, c);
  return t;
}

void TrigRational::add_term(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TrigRational& TrigRational::operator+=(const TrigRational& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TrigRational& TrigRational::operator-=(const TrigRational& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TrigRational TrigRational::scaled(const Rational& c, int twopi_shift, int inv_shift) const {
  TrigRational out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_)
    out.terms_.emplace(Key{k.inv_pow + inv_shift, k.twopi_pow + twopi_shift, k.kind}, v * c);
  return out;
}

TrigRational TrigRational::derivative() const {
  TrigRational out;
  for (const auto& [k, c] : terms_) {
    if (k.inv_pow != 0)
      out.add_term({k.inv_pow + 1, k.twopi_pow, k.kind}, c * Rational(-k.inv_pow));
    switch (k.kind) {
      case Kind::constant:
        break;
      case Kind::cosine:
        out.add_term({k.inv_pow, k.twopi_pow + 1, Kind::sine}, -c);
        break;
      case Kind::sine:
        out.add_term({k.inv_pow, k.twopi_pow + 1, Kind::cosine}, c);
        break;
    }
  }
  return out;
}

TrigRational TrigRational::derivative(int order) const {
  if (order < 1) throw std::invalid_argument("TrigRational: derivative order must be >= 1");
  TrigRational out = derivative();
  for (int i = 1; i < order; ++i) out = out.derivative();
  return out;
}

double TrigRational::eval(double x) const {
  const double u = 2.0 * std::numbers::pi * x;
  const double cu = std::cos(u), su = std::sin(u);
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    double t = c.to_double() * std::pow(2.0 * std::numbers::pi, k.twopi_pow) * std::pow(x, -k.inv_pow);
    if (k.kind == Kind::cosine) t *= cu;
    else if (k.kind == Kind::sine) t *= su;
    total += t;
  }
  return total;
}

mpf_class TrigRational::eval_mp(const mpf_class& x) const {
  const mp_bitcnt_t prec = x.get_prec();
  const mpf_class two_pi = 2 * bigfloat::pi(prec);
  mpf_class su(0, prec), cu(0, prec);
  bigfloat::sincos_small(mpf_class(two_pi * x, prec), su, cu);
  mpf_class total(0, prec);
  for (const auto& [k, c] : terms_) {
    mpf_class t(1, prec);
    mpf_class base = k.twopi_pow >= 0 ? two_pi : mpf_class(1 / two_pi, prec);
    for (int i = 0; i < std::abs(k.twopi_pow); ++i) t *= base;
    base = k.inv_pow >= 0 ? mpf_class(1 / x, prec) : x;
    for (int i = 0; i < std::abs(k.inv_pow); ++i) t *= base;
    t *= mpf_class(mpq_class(c.raw()), prec);
    if (k.kind == Kind::cosine) t *= cu;
    else if (k.kind == Kind::sine) t *= su;
    total += t;
  }
  return total;
}

TrigRational::SeriesBuckets TrigRational::series_buckets(int max_power) const {
  SeriesBuckets buckets;
  auto put = [&](int xp, int pp, const Rational& c) {
    if (c.is_zero()) return;
    Rational& slot = buckets[xp][pp];
    slot += c;
    if (slot.is_zero()) {
      buckets[xp].erase(pp);
      if (buckets[xp].empty()) buckets.erase(xp);
    }
  };
  for (const auto& [k, c] : terms_) {
    switch (k.kind) {
      case Kind::constant:
        put(-k.inv_pow, k.twopi_pow, c);
        break;
      case Kind::cosine:
        for (int i = 0; 2 * i - k.inv_pow <= max_power; ++i) {
          Rational coeff = c / Rational::factorial(static_cast<unsigned long>(2 * i));
          if (i % 2 == 1) coeff = -coeff;
          put(2 * i - k.inv_pow, k.twopi_pow + 2 * i, coeff);
        }
        break;
      case Kind::sine:
        for (int i = 0; 2 * i + 1 - k.inv_pow <= max_power; ++i) {
          Rational coeff = c / Rational::factorial(static_cast<unsigned long>(2 * i + 1));
          if (i % 2 == 1) coeff = -coeff;
          put(2 * i + 1 - k.inv_pow, k.twopi_pow + 2 * i + 1, coeff);
        }
        break;
    }
  }
  return buckets;
}

bool TrigRational::regular_at_zero() const {
  const auto buckets = series_buckets(0);
  for (const auto& [xp, bucket] : buckets)
    if (xp < 0 && !bucket.empty()) return false;
  return true;
}

std::vector<double> TrigRational::taylor_coefficients(int max_power) const {
  const auto buckets = series_buckets(max_power);
  for (const auto& [xp, bucket] : buckets)
    if (xp < 0 && !bucket.empty()) throw std::domain_error("TrigRational: singular at 0");
  std::vector<double> out(static_cast<std::size_t>(max_power) + 1, 0.0);
  for (const auto& [xp, bucket] : buckets) {
    if (xp < 0 || xp > max_power) continue;
    double v = 0.0;
    for (const auto& [pp, q] : bucket) v += q.to_double() * std::pow(2.0 * std::numbers::pi, pp);
    out[static_cast<std::size_t>(xp)] = v;
  }
  return out;
}

bool TrigRational::structurally_even() const {
  for (const auto& [k, c] : terms_) {
    (void)c;
    const bool odd_m = k.inv_pow % 2 != 0;
    if (k.kind == Kind::sine ? !odd_m : odd_m) return false;
  }
  return true;
}

double TrigRational::decay_envelope() const {
  double c1 = 0.0;
  for (const auto& [k, c] : terms_) {
    if (k.inv_pow <= 0) {
      if (k.kind == Kind::constant && k.inv_pow == 0) continue;
      throw std::domain_error("TrigRational: no 1/x envelope for growing terms");
    }
    c1 += std::abs(c.to_double()) * std::pow(2.0 * std::numbers::pi, k.twopi_pow);
  }
  return c1;
}

Rational TrigRational::constant_term() const {
  Rational c(0);
  for (const auto& [k, v] : terms_)
    if (k.kind == Kind::constant && k.inv_pow == 0 && k.twopi_pow == 0) c += v;
  return c;
}

}  // namespace wld
