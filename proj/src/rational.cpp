#include "wld/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace wld {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class v(s);
  v.canonicalize();
  return Rational(v);
}

Rational Rational::factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (v_ == 0) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e > 0 ? *this : inverse();
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace wld
