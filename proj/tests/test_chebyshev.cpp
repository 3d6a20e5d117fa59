#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wld/chebyshev.hpp"

using namespace wld;

TEST_CASE("recurrence values") {
  CHECK(cheb_eval(0, 1.234) == 1.0);
  CHECK(cheb_eval(1, -0.6) == -0.6);
  // T_2(x) = x^2 - 1
  CHECK(cheb_eval(2, 1.0) == doctest::Approx(0.0));
  CHECK(cheb_eval(2, 0.5) == doctest::Approx(-0.75));
  const auto t3 = cheb_coefficients(3);  // x^3 - 2x
  CHECK(t3[0] == Rational(0));
  CHECK(t3[1] == Rational(-2));
  CHECK(t3[2] == Rational(0));
  CHECK(t3[3] == Rational(1));
}

TEST_CASE("trigonometric form") {
  // T_n(2 cos t) = sin((n+1)t)/sin(t)
  for (int n : {1, 3, 6, 11})
    for (double theta : {0.3, std::numbers::pi / 5, 2.2}) {
      const double lhs = cheb_eval(n, 2.0 * std::cos(theta));
      const double rhs = std::sin((n + 1) * theta) / std::sin(theta);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("orthonormality under the semicircle weight") {
  CHECK(cheb_orthonormality(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(cheb_orthonormality(3, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(cheb_orthonormality(2, 5)) < 1e-12);
  CHECK(std::abs(cheb_orthonormality(0, 4)) < 1e-12);
}

TEST_CASE("generating series against closed forms") {
  // plain series at x = 1, t = 1/2: 1/(1/4 - 1/2 + 1) = 4/3
  const auto [s, c] = generating_series_check(SeriesKind::plain, 1.0, 0.5);
  CHECK(c == doctest::Approx(4.0 / 3).epsilon(1e-14));
  CHECK(s == doctest::Approx(c).epsilon(1e-13));

  // the ell-weighted series vanishes at t = 0
  const auto [s0, c0] = generating_series_check(SeriesKind::ell, 0.77, 0.0);
  CHECK(s0 == 0.0);
  CHECK(c0 == 0.0);

  for (int kind = 0; kind < 4; ++kind)
    for (double x : {-1.5, 0.3, 1.9})
      for (double t : {-0.7, 0.4, 0.66}) {
        const auto [series, closed] = generating_series_check(static_cast<SeriesKind>(kind), x, t);
        CHECK(std::abs(series - closed) < 1e-12);
      }
  CHECK_THROWS(generating_series_check(SeriesKind::plain, 0.0, 1.0));
  CHECK_THROWS(generating_series_check(SeriesKind::plain, 2.0, 0.5));
}
