#include <doctest.h>

#include <cmath>

#include "wld/chebyshev.hpp"
#include "wld/measures.hpp"

using namespace wld;

TEST_CASE("density reference values") {
  // harmonic r = 1: no prefactor, plain reciprocal weight
  const MeasureSpec h1{5, 1, true};
  const double x = 0.8;
  const double expect = 1.0 / (1.0 - x / std::sqrt(5.0) + 0.2);
  CHECK(measure_density(h1, x) == doctest::Approx(expect).epsilon(1e-14));

  // harmonic r = 2, p = 4, x = 0: (1 - 1/4) / (1 + 1/4)^2 = 12/25
  CHECK(measure_density({4, 2, true}, 0.0) == doctest::Approx(12.0 / 25).epsilon(1e-14));

  // unweighted r = 3 constant prefactor
  const double p = 3.0;
  const double c = std::pow(1 - 1 / p, 5) * std::pow(1 + 1 / p, 4) /
                   (1 + 1 / p + 4 / (p * p) + 1 / (p * p * p) + 1 / (p * p * p * p));
  const double denom = std::pow(1.0 + 1 / p, 4) * (1.0 + 1 / p);  // x = 0
  CHECK(measure_density({3, 3, false}, 0.0) == doctest::Approx(c / denom).epsilon(1e-14));

  CHECK_THROWS(measure_density({2, 4, false}, 0.0));
  CHECK_THROWS(measure_density({1, 1, true}, 0.0));
}

TEST_CASE("moments: closed forms vs quadrature") {
  for (long p : {2L, 3L, 9L}) {
    for (int ell = 0; ell <= 8; ++ell) {
      CHECK(cheb_moment({p, 1, true}, ell) ==
            doctest::Approx(cheb_moment_closed({p, 1, true}, ell)).epsilon(1e-11));
      CHECK(cheb_moment({p, 2, true}, ell) ==
            doctest::Approx(cheb_moment_closed({p, 2, true}, ell)).epsilon(1e-11));
      CHECK(cheb_moment({p, 3, true}, ell) ==
            doctest::Approx(cheb_moment_closed({p, 3, true}, ell)).epsilon(1e-11));
      CHECK(cheb_moment({p, 1, false}, ell) ==
            doctest::Approx(cheb_moment_closed({p, 1, false}, ell)).epsilon(1e-11));
      CHECK(cheb_moment({p, 2, false}, ell) ==
            doctest::Approx(cheb_moment_closed({p, 2, false}, ell)).epsilon(1e-11));
      CHECK(cheb_moment({p, 3, false}, ell) ==
            doctest::Approx(cheb_moment_closed({p, 3, false}, ell)).epsilon(1e-11));
    }
  }
  // normalization
  for (int r = 1; r <= 3; ++r) {
    CHECK(cheb_moment({7, r, true}, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cheb_moment({7, r, false}, 0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("weak convergence to the semicircle as p grows") {
  const long p = 1000000;
  for (int r = 1; r <= 3; ++r)
    for (int ell = 1; ell <= 4; ++ell) {
      CHECK(std::abs(cheb_moment_closed({p, r, true}, ell)) < 1e-2);
      CHECK(std::abs(cheb_moment({p, r, false}, ell)) < 1e-2);
    }
}

TEST_CASE("reconstruction from moments recovers the density") {
  // sum_l F_l T_l(x) converges to the density; truncation certified by the
  // p^{-l/2} poly(l) tail (L = 120 covers p = 2 far below 1e-8)
  for (long p : {2L, 3L, 5L}) {
    for (bool harmonic : {true, false}) {
      const MeasureSpec spec{p, 3, harmonic};
      const int L = 120;
      std::vector<double> F(L + 1);
      for (int l = 0; l <= L; ++l) F[static_cast<std::size_t>(l)] = cheb_moment_closed(spec, l);
      double worst = 0.0;
      for (int i = 1; i < 200; ++i) {
        const double x = -2.0 + 4.0 * i / 200.0;
        double sum = 0.0;
        for (int l = 0; l <= L; ++l) sum += F[static_cast<std::size_t>(l)] * cheb_eval(l, x);
        worst = std::max(worst, std::abs(sum - measure_density(spec, x)));
      }
      CHECK(worst < 1e-8);
    }
  }
  // the shorter truncation L = 60 already suffices for p >= 3
  for (long p : {3L, 4L, 5L, 25L}) {
    const MeasureSpec spec{p, 3, true};
    double worst = 0.0;
    for (int i = 1; i < 100; ++i) {
      const double x = -2.0 + 4.0 * i / 100.0;
      double sum = 0.0;
      for (int l = 0; l <= 60; ++l) sum += cheb_moment_closed(spec, l) * cheb_eval(l, x);
      worst = std::max(worst, std::abs(sum - measure_density(spec, x)));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("a(p,r): reference values and routes") {
  CHECK(a_pr_closed(7, 1) == Rational(1));
  // both closed branches at the overlap, exactly
  for (long p : {2L, 3L, 5L, 7L})
    CHECK(a_pr_closed_power_form(p, 3) == a_pr_closed_binomial_form(p, 3));
  // closed vs quadrature at a point past the overlap
  CHECK(a_pr(2, 5, APrMethod::closed) ==
        doctest::Approx(a_pr(2, 5, APrMethod::quadrature)).epsilon(1e-11));
  CHECK(a_pr(2, 5, APrMethod::hypergeometric) ==
        doctest::Approx(a_pr(2, 5, APrMethod::closed)).epsilon(1e-11));
  const SeriesValue hyper = a_pr_hypergeometric(3, 4);
  CHECK(hyper.converged);
  CHECK(hyper.tail_bound < 1e-10);
}

TEST_CASE("normalizer equals the product prefactor for r <= 3") {
  for (long p : {2L, 3L, 4L, 5L, 25L})
    for (int r = 1; r <= 3; ++r)
      CHECK(a_pr_closed(p, r) == (Rational(1) - Rational(1, p)).pow(-static_cast<long>(r) * (r - 1) / 2));
}

TEST_CASE("sato-tate product moments") {
  // delta(p, p) = 1 by orthonormality
  CHECK(delta_sato_tate({{2, {1, 1}}}) == doctest::Approx(1.0).epsilon(1e-12));
  // inserting the trivial index changes nothing
  CHECK(delta_sato_tate({{2, {0, 1, 1}}}) == doctest::Approx(1.0).epsilon(1e-12));
  // T_1^2 = T_2 + T_0, so the triple (1,1,2) integrates to 1
  CHECK(delta_sato_tate({{5, {1, 1, 2}}}) == doctest::Approx(1.0).epsilon(1e-12));
  // multiplicativity across distinct primes
  CHECK(delta_sato_tate({{2, {1, 1}}, {3, {2, 2}}}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(delta_sato_tate({{2, {1}}})) < 1e-12);
  CHECK_THROWS(delta_sato_tate({{2, {1}}, {2, {1}}}));
}

TEST_CASE("local factor at zero shift") {
  // m = 0 reduces to the prefactor times the normalizer mass
  for (long p : {2L, 5L})
    for (int r = 1; r <= 4; ++r) {
      const double want = std::pow(1.0 - 1.0 / static_cast<double>(p), r * (r - 1) / 2) *
                          a_pr(p, r, APrMethod::closed);
      CHECK(A_p_at_zero(p, r, 0) == doctest::Approx(want).epsilon(1e-11));
    }
  // moment ratio reproduces the measure moments
  for (int ell = 0; ell <= 5; ++ell) {
    const double ratio = A_p_at_zero(3, 2, ell) / A_p_at_zero(3, 2, 0);
    CHECK(ratio == doctest::Approx(cheb_moment({3, 2, true}, ell)).epsilon(1e-10));
  }
  // large p: the local factor tends to 1
  CHECK(A_p_at_zero(1000000, 3, 0) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("g and H values") {
  for (long p : {2L, 7L}) {
    CHECK(g_value(p, 0) == Rational(1));
    CHECK(g_value(p, 2) == Rational(3) + Rational(3) * (Rational(1) - Rational(1, p)));
    CHECK(H_ratio(p, 0) == Rational(1));
  }
  // multiplicativity of g across coprime arguments is definitional for the
  // prime-power table; spot-check the quadratic growth instead
  CHECK(g_value(2, 5) == Rational(6) + Rational(1, 2) * Rational(15));

  // closed-form ratio against the series resummation, exactly
  for (long p : {2L, 3L, 5L})
    for (int ell = 0; ell <= 8; ++ell) CHECK(H_ratio(p, ell) == appendix_closed_ratio(p, ell));

  // H(O_F) is the local factor of the even-indexed series sum_b g(p^{2b}) p^{-2b}
  for (long p : {2L, 3L}) {
    Rational sum(0);
    for (int b = 0; b <= 80; ++b) sum += g_value(p, 2 * b) * Rational(1, p * p).pow(b);
    CHECK(std::abs((sum - H_of_integer_ring(p)).to_double()) < 1e-18);
  }
}

TEST_CASE("unweighted cubic moments from the H ratio") {
  CHECK(unweighted_moment_r3(2, 0) == doctest::Approx(1.0));
  for (long p : {2L, 3L})
    for (int ell = 1; ell <= 10; ++ell)
      CHECK(unweighted_moment_r3(p, ell) ==
            doctest::Approx(cheb_moment({p, 3, false}, ell)).epsilon(1e-10));
  // quadrature vs closed rational route
  CHECK(unweighted_moment_r3(3, 2) ==
        doctest::Approx(cheb_moment({3, 3, false}, 2)).epsilon(1e-12));
}

TEST_CASE("divisor identity") {
  const Factorization p2{{2, 2}};
  const Factorization p3{{2, 3}};
  const Factorization q{{3, 1}};
  CHECK(tau_of_product_identity({{2, 1}}, {{2, 1}}) == 3);
  CHECK(tau_of_product_identity({{2, 1}}, q) == 4);
  CHECK(tau_of_product_identity(p2, p3) == 6);
  for (const auto& [m, n] : std::vector<std::pair<Factorization, Factorization>>{
           {{{2, 3}, {3, 1}}, {{2, 1}, {5, 2}}},
           {{{2, 2}, {7, 1}}, {{7, 2}}},
           {{}, {{3, 4}}},
       })
    CHECK(tau_of_product_identity(m, n) == tau_of_product_direct(m, n));
}
