#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wld/trig_rational.hpp"

using wld::Rational;
using wld::TrigRational;
using Kind = wld::TrigRational::Kind;

TEST_CASE("derivative of inverse powers") {
  // d/dx 1/x = -1/x^2
  const TrigRational f = TrigRational::term(1, 0, Kind::constant, Rational(1));
  const TrigRational d = f.derivative();
  CHECK(d.terms().size() == 1);
  CHECK(d.terms().begin()->first.inv_pow == 2);
  CHECK(d.terms().begin()->second == Rational(-1));
}

TEST_CASE("derivative of cos(2 pi x)/x by product rule") {
  const TrigRational f = TrigRational::term(1, 0, Kind::cosine, Rational(1));
  const TrigRational d = f.derivative();
  // -2 pi sin(2 pi x)/x - cos(2 pi x)/x^2
  CHECK(d.terms().size() == 2);
  const double x = 0.37;
  const double expect = -2.0 * std::numbers::pi * std::sin(2.0 * std::numbers::pi * x) / x -
                        std::cos(2.0 * std::numbers::pi * x) / (x * x);
  CHECK(d.eval(x) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("third derivative matches finite differences") {
  // f = (1 - cos(2 pi x)) / (2 pi x)
  const TrigRational f = TrigRational::term(1, -1, Kind::constant, Rational(1)) -
                         TrigRational::term(1, -1, Kind::cosine, Rational(1));
  const TrigRational d3 = f.derivative(3);
  const double x = 0.4;
  auto fd = [&f](double t) { return f.eval(t); };
  // fourth-order central stencil plus one Richardson step
  auto stencil = [&fd, x](double h) {
    return (fd(x - 3 * h) - 8 * fd(x - 2 * h) + 13 * fd(x - h) - 13 * fd(x + h) +
            8 * fd(x + 2 * h) - fd(x + 3 * h)) /
           (8 * h * h * h);
  };
  const double h = 4e-3;
  const double fd3 = (16.0 * stencil(h) - stencil(2 * h)) / 15.0;
  CHECK(std::abs(d3.eval(x) - fd3) < 1e-7);
}

TEST_CASE("series buckets detect regularity") {
  // sin(2 pi x)/(2 pi x) is regular at 0 with value 1
  const TrigRational sinc = TrigRational::term(1, -1, Kind::sine, Rational(1));
  CHECK(sinc.regular_at_zero());
  const auto taylor = sinc.taylor_coefficients(8);
  CHECK(taylor[0] == doctest::Approx(1.0));
  CHECK(taylor[1] == 0.0);

  // cos(2 pi x)/x is singular at 0
  const TrigRational bad = TrigRational::term(1, 0, Kind::cosine, Rational(1));
  CHECK_FALSE(bad.regular_at_zero());
  CHECK_THROWS(bad.taylor_coefficients(4));
}

TEST_CASE("taylor and closed evaluation agree off zero") {
  const TrigRational f = TrigRational::term(1, -1, Kind::sine, Rational(3)) -
                         TrigRational::term(2, -2, Kind::cosine, Rational(5)) +
                         TrigRational::term(2, -2, Kind::constant, Rational(5));
  CHECK(f.regular_at_zero());
  const auto taylor = f.taylor_coefficients(40);
  for (double x : {0.01, 0.02, 0.04}) {
    double horner = 0.0;
    for (std::size_t i = taylor.size(); i-- > 0;) horner = horner * x + taylor[i];
    CHECK(horner == doctest::Approx(f.eval_mp(mpf_class(x, 256)).get_d()).epsilon(1e-12));
  }
}

TEST_CASE("structural evenness") {
  const TrigRational even = TrigRational::term(1, -1, Kind::sine, Rational(1)) +
                            TrigRational::term(2, 0, Kind::cosine, Rational(2)) +
                            TrigRational::constant(Rational(1));
  CHECK(even.structurally_even());
  const TrigRational odd = TrigRational::term(2, 0, Kind::sine, Rational(1));
  CHECK_FALSE(odd.structurally_even());
}

TEST_CASE("decay envelope bounds the function") {
  const TrigRational f = TrigRational::term(1, -1, Kind::sine, Rational(2)) +
                         TrigRational::term(3, -2, Kind::cosine, Rational(-7));
  const double c = f.decay_envelope();
  for (double x : {1.0, 2.5, 10.0, 100.0}) CHECK(std::abs(f.eval(x)) <= c / x + 1e-15);
}
