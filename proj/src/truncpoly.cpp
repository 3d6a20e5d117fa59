#include "wld/truncpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace wld {

TruncPoly::TruncPoly(int nvars, int cap) : nvars_(nvars), cap_(cap) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("TruncPoly: bad nvars");
  if (cap < 0 || cap > kMaxCap) throw std::invalid_argument("TruncPoly: bad cap");
}

std::uint64_t TruncPoly::pack(std::span<const int> e) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) k |= static_cast<std::uint64_t>(e[i]) << (5 * i);
  return k;
}

void TruncPoly::unpack(std::uint64_t key, std::vector<int>& e) const {
  for (int i = 0; i < nvars_; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>((key >> (5 * i)) & 0x1f);
}

void TruncPoly::add_term(std::uint64_t key, const Rational& c) {
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TruncPoly TruncPoly::constant(int nvars, int cap, const Rational& c) {
  TruncPoly p(nvars, cap);
  if (!c.is_zero()) p.terms_.emplace(0, c);
  return p;
}

TruncPoly TruncPoly::monomial(int nvars, int cap, int var, int e, const Rational& c) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("TruncPoly: bad variable index");
  if (e < 0) throw std::invalid_argument("TruncPoly: negative exponent");
  TruncPoly p(nvars, cap);
  if (e <= cap && !c.is_zero())
    p.terms_.emplace(static_cast<std::uint64_t>(e) << (5 * var), c);
  return p;
}

TruncPoly TruncPoly::vandermonde(int nvars, int cap, std::span<const int> vars, int power) {
  TruncPoly p = constant(nvars, cap, Rational(1));
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      TruncPoly factor = monomial(nvars, cap, vars[j], power, Rational(1));
      factor -= monomial(nvars, cap, vars[i], power, Rational(1));
      p = p * factor;
    }
  return p;
}

TruncPoly TruncPoly::vandermonde(int nvars, int cap, int power) {
  std::vector<int> vars(static_cast<std::size_t>(nvars));
  std::iota(vars.begin(), vars.end(), 0);
  return vandermonde(nvars, cap, vars, power);
}

TruncPoly TruncPoly::truncated_exp(int nvars, int cap, int var) {
  TruncPoly p(nvars, cap);
  Rational c(1);
  for (int m = 0; m <= cap; ++m) {
    if (m > 0) c /= Rational(m);
    p.add_term(static_cast<std::uint64_t>(m) << (5 * var), c);
  }
  return p;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  if (nvars_ != o.nvars_ || cap_ != o.cap_) throw std::invalid_argument("TruncPoly: shape mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
  if (nvars_ != o.nvars_ || cap_ != o.cap_) throw std::invalid_argument("TruncPoly: shape mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
  if (nvars_ != o.nvars_ || cap_ != o.cap_) throw std::invalid_argument("TruncPoly: shape mismatch");
  TruncPoly out(nvars_, cap_);
  // per-variable overflow test on packed keys: adding 5-bit fields cannot carry
  // because cap <= 31 is enforced against each field after the add
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      std::uint64_t k = 0;
      bool keep = true;
      for (int i = 0; i < nvars_; ++i) {
        const int e = static_cast<int>((ka >> (5 * i)) & 0x1f) + static_cast<int>((kb >> (5 * i)) & 0x1f);
        if (e > cap_) { keep = false; break; }
        k |= static_cast<std::uint64_t>(e) << (5 * i);
      }
      if (keep) out.add_term(k, ca * cb);
    }
  }
  return out;
}

void TruncPoly::scale(const Rational& c) {
  if (c.is_zero()) { terms_.clear(); return; }
  for (auto& [k, v] : terms_) v *= c;
}

void TruncPoly::shift(int var, int e) {
  if (e == 0) return;
  std::unordered_map<std::uint64_t, Rational> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) {
    const int old = static_cast<int>((k >> (5 * var)) & 0x1f);
    if (old + e > cap_) continue;
    const std::uint64_t nk = (k & ~(static_cast<std::uint64_t>(0x1f) << (5 * var))) |
                             (static_cast<std::uint64_t>(old + e) << (5 * var));
    out.emplace(nk, c);
  }
  terms_ = std::move(out);
}

Rational TruncPoly::coefficient(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != nvars_) throw std::invalid_argument("TruncPoly: bad exponent vector");
  for (int e : exponents)
    if (e < 0 || e > cap_) throw std::invalid_argument("TruncPoly: exponent outside cap");
  auto it = terms_.find(pack(exponents));
  return it == terms_.end() ? Rational(0) : it->second;
}

}  // namespace wld
