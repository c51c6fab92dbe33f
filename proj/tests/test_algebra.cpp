#include <doctest.h>

#include <cmath>
#include <random>

#include "origami/algebra.hpp"
#include "origami/geometry.hpp"

using namespace origami;

TEST_CASE("chebyshev base cases and small polynomials") {
  CHECK(chebyshev_u(0).coeffs == std::vector<std::int64_t>{1});
  CHECK(chebyshev_u(1).coeffs == std::vector<std::int64_t>{0, 2});
  CHECK(chebyshev_u(2).coeffs == std::vector<std::int64_t>{-1, 0, 4});
  CHECK(chebyshev_u(3).coeffs == std::vector<std::int64_t>{0, -4, 0, 8});  // 8x^3 - 4x
  CHECK(chebyshev_u(4).coeffs == std::vector<std::int64_t>{1, 0, -12, 0, 16});
}

TEST_CASE("chebyshev degree, leading coefficient and parity up to the cap") {
  for (int k = 0; k <= kChebyshevMaxK; ++k) {
    const IntPoly u = chebyshev_u(k);
    CHECK(u.degree() == k);
    CHECK(u.leading() == (std::int64_t{1} << k));
    CHECK(chebyshev_parity_holds(k));
  }
  CHECK_THROWS_AS(chebyshev_u(kChebyshevMaxK + 1), Error);
  CHECK_THROWS_AS(chebyshev_u(-1), Error);
}

TEST_CASE("chebyshev matches sin((k+1)theta)/sin(theta)") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> dist(0.1, kPi - 0.1);
  for (int k = 0; k <= 20; ++k) {
    const IntPoly u = chebyshev_u(k);
    for (int s = 0; s < 100; ++s) {
      const double theta = dist(rng);
      const double expected = std::sin((k + 1) * theta) / std::sin(theta);
      CHECK(std::fabs(eval_poly(u, std::cos(theta)) - expected) < 1e-9);
    }
  }
}

TEST_CASE("horner evaluation") {
  CHECK(eval_poly(IntPoly{{1}}, 123.0) == 1.0);
  CHECK(eval_poly(IntPoly{{0, 2}}, 0.3) == doctest::Approx(0.6));
  CHECK(eval_poly(chebyshev_u(2), 0.5) == doctest::Approx(0.0));  // sin(3t)/sin t at t=pi/3
  CHECK(eval_poly(IntPoly{}, 2.0) == 0.0);
}

TEST_CASE("projection sequence endpoints") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(projection_xk(n, 0) == 0.0);
    CHECK(projection_xk(n, 1) == 1.0);
    const double c = Angle::rational_pi(1, n).cos_sin().first;
    CHECK(projection_xk(n, n - 2) == 4.0 * c * c);
  }
  CHECK_THROWS_AS(projection_xk(5, -1), Error);
  CHECK_THROWS_AS(projection_xk(5, 4), Error);
  CHECK_THROWS_AS(projection_xk(2, 0), Error);
}

TEST_CASE("projection identity against the chebyshev ratio") {
  for (int n = 3; n <= 12; ++n) {
    const double c = std::cos(kPi / n);
    for (int k = 2; k <= n - 2; ++k) {
      const double via_ratio =
          1.0 + eval_poly(chebyshev_u(k - 2), c) / eval_poly(chebyshev_u(k), c);
      CHECK(std::fabs(projection_xk(n, k) - via_ratio) < 1e-12);
    }
  }
}

TEST_CASE("rebased projections anchor at 0 and 1") {
  for (int n = 4; n <= 10; ++n) {
    for (int i = 0; i <= n - 3; ++i) {
      for (int j = i + 1; j <= n - 2; ++j) {
        CHECK(projection_xk_rebased(n, i, i, j) == doctest::Approx(0.0));
        CHECK(projection_xk_rebased(n, j, i, j) == doctest::Approx(1.0));
      }
    }
  }
  CHECK_THROWS_AS(projection_xk_rebased(5, 1, 2, 2), Error);
  CHECK_THROWS_AS(projection_xk_rebased(5, 1, 3, 1), Error);
}

TEST_CASE("rebased projections agree with the geometric route") {
  // dual route: intersect + project via the geometry module
  const Tolerance tol;
  for (int n = 3; n <= 10; ++n) {
    for (int i = 0; i <= n - 3; ++i) {
      for (int j = i + 1; j <= n - 2; ++j) {
        const Point pt = intersect({0.0, 0.0}, {1.0, 0.0},
                                   Angle::rational_pi(i + 1, n), Angle::rational_pi(j + 1, n));
        for (int k = 0; k <= n - 2; ++k) {
          const double geometric = project_to_real(pt, Angle::rational_pi(k + 1, n));
          CHECK(std::fabs(projection_xk_rebased(n, k, i, j) - geometric) < tol.eps_scalar);
        }
      }
    }
  }
}

TEST_CASE("rebased pentagon sample equals its geometric value") {
  const Point pt = intersect({0.0, 0.0}, {1.0, 0.0}, Angle::rational_pi(1, 5),
                             Angle::rational_pi(2, 5));
  const double geometric = project_to_real(pt, Angle::rational_pi(4, 5));
  CHECK(projection_xk_rebased(5, 3, 0, 1) == doctest::Approx(geometric).epsilon(1e-12));
}

TEST_CASE("2cos(pi/n) membership is the parity of n") {
  CHECK(two_cos_in_M(5));
  CHECK(!two_cos_in_M(4));
  CHECK(two_cos_in_M(3));
  CHECK(!two_cos_in_M(8));
  CHECK(two_cos_in_M(7));
  CHECK_THROWS_AS(two_cos_in_M(2), Error);
}
