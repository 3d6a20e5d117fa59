#include <doctest.h>

#include <array>
#include <vector>

#include "wld/linalg.hpp"
#include "wld/truncpoly.hpp"

using wld::Rational;
using wld::TruncPoly;

namespace {

Rational coeff(const TruncPoly& p, std::initializer_list<int> e) {
  std::vector<int> v(e);
  return p.coefficient(v);
}

}  // namespace

TEST_CASE("vandermonde base cases") {
  // single variable: empty product
  CHECK(coeff(TruncPoly::vandermonde(1, 0, 1), {0}) == Rational(1));

  const TruncPoly v21 = TruncPoly::vandermonde(2, 2, 1);  // z2 - z1
  CHECK(coeff(v21, {0, 1}) == Rational(1));
  CHECK(coeff(v21, {1, 0}) == Rational(-1));
  CHECK(coeff(v21, {0, 0}) == Rational(0));

  const TruncPoly v22 = TruncPoly::vandermonde(2, 2, 2);  // z2^2 - z1^2
  CHECK(coeff(v22, {0, 2}) == Rational(1));
  CHECK(coeff(v22, {2, 0}) == Rational(-1));
}

TEST_CASE("vandermonde over a variable subset") {
  // two of three variables: z2 - z0, with z1 inert
  const std::array<int, 2> vars{0, 2};
  const TruncPoly v = TruncPoly::vandermonde(3, 2, vars, 1);
  CHECK(coeff(v, {0, 0, 1}) == Rational(1));
  CHECK(coeff(v, {1, 0, 0}) == Rational(-1));
  CHECK(coeff(v, {0, 1, 0}) == Rational(0));
}

TEST_CASE("truncated exponential coefficients") {
  const TruncPoly e0 = TruncPoly::truncated_exp(1, 0, 0);
  CHECK(coeff(e0, {0}) == Rational(1));
  const TruncPoly e = TruncPoly::truncated_exp(1, 4, 0);
  CHECK(coeff(e, {1}) == Rational(1));
  CHECK(coeff(e, {2}) == Rational(1, 2));
  CHECK(coeff(e, {3}) == Rational(1, 6));
  CHECK(coeff(e, {4}) == Rational(1, 24));
}

TEST_CASE("coefficient extraction on a product") {
  // (z2^2 - z1^2)(z2 - z1) = z2^3 - z1 z2^2 - z1^2 z2 + z1^3
  const TruncPoly p = TruncPoly::vandermonde(2, 3, 2) * TruncPoly::vandermonde(2, 3, 1);
  CHECK(coeff(p, {2, 1}) == Rational(-1));
  CHECK(coeff(p, {1, 2}) == Rational(-1));
  CHECK(coeff(p, {0, 3}) == Rational(1));
  CHECK(coeff(p, {3, 0}) == Rational(1));
}

TEST_CASE("multiplication truncates above the cap") {
  const TruncPoly a = TruncPoly::monomial(1, 3, 0, 2, Rational(1));
  const TruncPoly b = TruncPoly::monomial(1, 3, 0, 2, Rational(5));
  CHECK((a * b).term_count() == 0);  // z^4 does not fit a cap of 3
}

TEST_CASE("vandermonde antisymmetry under variable swap") {
  // relabeling z_i <-> z_j negates every coefficient
  const int r = 4, cap = 6;
  const TruncPoly v = TruncPoly::vandermonde(r, cap, 1);
  const std::array<int, 4> relabel{2, 1, 0, 3};  // swap variables 0 and 2
  v.for_each_term([&](const std::vector<int>& e, const Rational& c) {
    std::vector<int> swapped(4);
    for (int i = 0; i < r; ++i) swapped[static_cast<std::size_t>(relabel[static_cast<std::size_t>(i)])] = e[static_cast<std::size_t>(i)];
    CHECK(v.coefficient(swapped) == -c);
  });
}

TEST_CASE("multiplication commutes and associates within the cap") {
  // randomized small polynomials whose products stay inside the box
  wld::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int cap = 8;
    auto random_poly = [&rng, cap](int max_deg) {
      TruncPoly p(3, cap);
      for (int t = 0; t < 4; ++t) {
        const int var = static_cast<int>(rng.next_u64() % 3);
        const int deg = static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_deg + 1));
        const long num = static_cast<long>(rng.next_u64() % 11) - 5;
        p += TruncPoly::monomial(3, cap, var, deg, Rational(num, 3));
      }
      return p;
    };
    const TruncPoly a = random_poly(2), b = random_poly(2), c = random_poly(2);
    const TruncPoly ab = a * b, ba = b * a;
    std::vector<int> probe(3);
    for (probe[0] = 0; probe[0] <= 6; ++probe[0])
      for (probe[1] = 0; probe[1] <= 3; ++probe[1])
        for (probe[2] = 0; probe[2] <= 3; ++probe[2]) {
          CHECK(ab.coefficient(probe) == ba.coefficient(probe));
          CHECK(((a * b) * c).coefficient(probe) == (a * (b * c)).coefficient(probe));
        }
  }
}
