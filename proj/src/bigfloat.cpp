#include "wld/bigfloat.hpp"

#include <mutex>

namespace wld::bigfloat {

namespace {

constexpr mp_bitcnt_t kCachedBits = 4096;

mpf_class arctan_inverse(unsigned long k, mp_bitcnt_t prec) {
  // atan(1/k) = sum_i (-1)^i / ((2i+1) k^{2i+1})
  mpf_class term(0, prec), total(0, prec);
  mpf_class power(1, prec);
  power /= k;
  const mpf_class kk = mpf_class(k) * mpf_class(k);
  unsigned long i = 0;
  mpf_class floor_eps(0, prec);
  mpf_div_2exp(floor_eps.get_mpf_t(), mpf_class(1, prec).get_mpf_t(), prec + 16);
  while (true) {
    term = power / (2 * i + 1);
    if (term < floor_eps) break;
    if (i % 2 == 0) total += term; else total -= term;
    power /= kk;
    ++i;
  }
  return total;
}

const mpf_class& cached_pi() {
  static mpf_class value(0, kCachedBits);
  static std::once_flag flag;
  std::call_once(flag, [] {
    value = 16 * arctan_inverse(5, kCachedBits) - 4 * arctan_inverse(239, kCachedBits);
  });
  return value;
}

}  // namespace

mpf_class pi(mp_bitcnt_t prec) {
  mpf_class out(0, prec);
  out = cached_pi();
  return out;
}

void sincos_small(const mpf_class& u, mpf_class& s, mpf_class& c) {
  const mp_bitcnt_t prec = u.get_prec();
  mpf_class term(1, prec);
  s = mpf_class(0, prec);
  c = mpf_class(0, prec);
  mpf_class floor_eps(0, prec);
  mpf_div_2exp(floor_eps.get_mpf_t(), mpf_class(1, prec).get_mpf_t(), prec + 32);
  // term = u^k / k!, alternating into cos (even k) and sin (odd k)
  unsigned long k = 0;
  while (true) {
    mpf_class mag(0, prec);
    mpf_abs(mag.get_mpf_t(), term.get_mpf_t());
    if (k > 4 && mag < floor_eps) break;
    const bool negative = (k / 2) % 2 == 1;
    if (k % 2 == 0) { if (negative) c -= term; else c += term; }
    else            { if (negative) s -= term; else s += term; }
    ++k;
    term *= u;
    term /= k;
  }
}

}  // namespace wld::bigfloat
