#ifndef WLD_BIGFLOAT_HPP
#define WLD_BIGFLOAT_HPP

#include <gmpxx.h>

namespace wld::bigfloat {

// pi rounded to the precision of the destination; backed by a cached
// 4096-bit Machin evaluation
mpf_class pi(mp_bitcnt_t prec);

// Taylor sine/cosine, valid for |u| up to ~4*pi (no argument reduction)
void sincos_small(const mpf_class& u, mpf_class& s, mpf_class& c);

}  // namespace wld::bigfloat

#endif
