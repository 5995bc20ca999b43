#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cliffwave/errors.hpp"
#include "cliffwave/special_functions.hpp"
#include "support.hpp"

using namespace cliffwave;

namespace {

// J_n(x) = (1/pi) int_0^pi cos(n tau - x sin tau) d tau; the trapezoid rule
// is spectrally accurate for this periodic integrand.
double integral_j(int n, double x) {
  const int N = 400;
  double s = 0.0;
  for (int i = 0; i <= N; ++i) {
    const double tau = std::numbers::pi * i / N;
    const double w = (i == 0 || i == N) ? 0.5 : 1.0;
    s += w * std::cos(n * tau - x * std::sin(tau));
  }
  return s / N;
}

// K_n(x) = int_0^inf exp(-x cosh t) cosh(n t) dt, trapezoid on a truncated range.
double integral_k(int n, double x) {
  const double tmax = std::acosh(50.0 / x + 1.0) + 2.0;
  const int N = 20000;
  const double h = tmax / N;
  double s = 0.5 * std::exp(-x);
  for (int i = 1; i <= N; ++i) s += std::exp(-x * std::cosh(i * h)) * std::cosh(n * i * h);
  return s * h;
}

std::vector<double> random_abscissae(int count, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> xs(count);
  for (auto& x : xs) x = u(rng);
  return xs;
}

}  // namespace

TEST_SUITE("special_fn") {
  TEST_CASE("Bessel J at the origin") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(5, 0.0) == 0.0);
    CHECK(bessel_j(-3, 1.3) == doctest::Approx(-bessel_j(3, 1.3)).epsilon(1e-14));
  }

  TEST_CASE("first zero of J0") {
    const double oracle = cwtest::bisect([](double x) { return cwtest::series_j(0, x); }, 2.0, 3.0);
    const double lib = cwtest::bisect([](double x) { return bessel_j(0, x); }, 2.0, 3.0);
    // mpmath besseljzero(0, 1), 30 digits
    const double frozen = 2.404825557695772768621631879326;
    CHECK(std::abs(oracle - frozen) < 1e-12);
    CHECK(std::abs(lib - oracle) < 1e-9);
  }

  TEST_CASE("J_n agrees with independent evaluations on (0, 30]") {
    double worst = 0.0;
    for (double x : random_abscissae(100, 1e-3, 30.0, cwtest::kSeed + 20))
      for (int n = 0; n <= 12; ++n) {
        worst = std::max(worst, std::abs(bessel_j(n, x) - integral_j(n, x)));
        if (x < 20.0) worst = std::max(worst, std::abs(bessel_j(n, x) - cwtest::series_j(n, x)));
      }
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("J_n across the series switch point") {
    for (double x : {kBesselSeriesSwitch - 1e-9, kBesselSeriesSwitch, kBesselSeriesSwitch + 1e-9})
      for (int n = 0; n <= 12; ++n) CHECK(std::abs(bessel_j(n, x) - integral_j(n, x)) < 1e-10);
  }

  TEST_CASE("J recurrence for orders up to 12") {
    double worst = 0.0;
    for (double x : random_abscissae(100, 0.01, 40.0, cwtest::kSeed + 21))
      for (int n = 1; n <= 12; ++n) {
        const double lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x);
        const double rhs = 2.0 * n / x * bessel_j(n, x);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("spherical Bessel j") {
    CHECK(std::abs(spherical_j(0, std::numbers::pi)) < 1e-15);
    CHECK(spherical_j(0, 0.0) == 1.0);
    CHECK(spherical_j(3, 0.0) == 0.0);
    const double x = 1.7;
    CHECK(spherical_j(1, x) == doctest::Approx(std::sin(x) / (x * x) - std::cos(x) / x).epsilon(1e-10));
    for (double y : {0.01, 0.5, 3.0, 25.0}) CHECK(spherical_j(0, y) == doctest::Approx(std::sin(y) / y).epsilon(1e-13));
    const double y = 2.3;
    const double j2 = (3.0 / (y * y) - 1.0) * std::sin(y) / y - 3.0 * std::cos(y) / (y * y);
    CHECK(spherical_j(2, y) == doctest::Approx(j2).epsilon(1e-12));
  }

  TEST_CASE("spherical j recurrence for orders up to 12") {
    double worst = 0.0;
    for (double x : random_abscissae(100, 0.05, 40.0, cwtest::kSeed + 22))
      for (int l = 1; l <= 12; ++l) {
        const double lhs = spherical_j(l - 1, x) + spherical_j(l + 1, x);
        const double rhs = (2.0 * l + 1.0) / x * spherical_j(l, x);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("entire continuation of spherical j") {
    for (int l = 0; l <= 4; ++l)
      for (double s : {0.3, 1.1, 4.0}) {
        const double direct = spherical_j(l, s) / std::pow(s, l);
        CHECK(spherical_j_entire(l, s * s) == doctest::Approx(direct).epsilon(1e-11));
      }
    CHECK(spherical_j_entire(0, 0.0) == 1.0);
    CHECK(spherical_j_entire(1, 0.0) == doctest::Approx(1.0 / 3.0));
    // u < 0: i_0(s) = sinh(s)/s and i_1(s)/s = (s cosh s - sinh s)/s^3.
    for (double s : {0.2, 1.5, 6.0}) {
      CHECK(spherical_j_entire(0, -s * s) == doctest::Approx(std::sinh(s) / s).epsilon(1e-12));
      CHECK(spherical_j_entire(1, -s * s) ==
            doctest::Approx((s * std::cosh(s) - std::sinh(s)) / (s * s * s)).epsilon(1e-10));
    }
  }

  TEST_CASE("modified Bessel K values") {
    // mpmath besselk(0, 1)
    CHECK(std::abs(bessel_k(0, 1.0) - 0.42102443824070833333562737921) < 1e-12);
    // mpmath besselk(1, 1e-6) * 1e-6
    CHECK(std::abs(bessel_k(1, 1e-6) * 1e-6 - 0.99999999999278) < 1e-12);
    CHECK(std::abs(bessel_k(1, 1e-6) * 1e-6 - 1.0) < 1e-4);
    for (double x : {0.1, 0.9, 1.9999, 2.0, 2.0001, 5.0, 17.0})
      for (int n : {0, 1, 2, 5})
        CHECK(bessel_k(n, x) == doctest::Approx(integral_k(n, x)).epsilon(1e-9));
    CHECK_THROWS_AS(bessel_k(0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(1, -1.0), DomainError);
  }

  TEST_CASE("K is positive and strictly decreasing") {
    for (int n = 0; n <= 12; ++n) {
      double prev = bessel_k(n, 0.05);
      for (double x = 0.1; x < 30.0; x += 0.05) {
        const double k = bessel_k(n, x);
        CHECK(k > 0.0);
        CHECK(k < prev);
        prev = k;
      }
    }
  }

  TEST_CASE("K recurrence for orders up to 12") {
    double worst = 0.0;
    for (double x : random_abscissae(100, 0.05, 30.0, cwtest::kSeed + 23))
      for (int n = 1; n <= 12; ++n) {
        const double rhs = bessel_k(n - 1, x) + 2.0 * n / x * bessel_k(n, x);
        worst = std::max(worst, std::abs(bessel_k(n + 1, x) - rhs) / rhs);
      }
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("K_0 diverges logarithmically at the axis") {
    // K_0(x) + ln(x/2) + euler_gamma -> 0
    for (double x : {1e-3, 1e-5, 1e-7})
      CHECK(std::abs(bessel_k(0, x) + std::log(x / 2.0) + std::numbers::egamma) < 10 * x);
  }

  TEST_CASE("associated Legendre functions") {
    for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
      CHECK(legendre_p(0, 0, x) == 1.0);
      CHECK(legendre_p(1, 0, x) == doctest::Approx(x));
      CHECK(legendre_p(1, 1, x) == doctest::Approx(std::sqrt(1 - x * x)));  // no Condon-Shortley phase
    }
    CHECK(legendre_p(2, 0, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(legendre_p(2, 2, 0.5) == doctest::Approx(3.0 * 0.75));
    CHECK_THROWS_AS(legendre_p(2, 3, 0.1), DomainError);
    CHECK_THROWS_AS(legendre_p(2, -1, 0.1), DomainError);
    CHECK_THROWS_AS(legendre_p(2, 1, 1.5), DomainError);

    double c[3];
    legendre_derivative_coeffs(2, 0, c);
    CHECK(c[0] == doctest::Approx(-0.5));
    CHECK(c[1] == doctest::Approx(0.0));
    CHECK(c[2] == doctest::Approx(1.5));
  }

  TEST_CASE("Legendre recurrence in l for orders up to 12") {
    double worst = 0.0;
    for (double x : random_abscissae(100, -1.0, 1.0, cwtest::kSeed + 24))
      for (int l = 1; l < 12; ++l)
        for (int m = 0; m <= l - 1; ++m) {
          const double lhs = (l - m + 1) * legendre_p(l + 1, m, x);
          const double rhs = (2 * l + 1) * x * legendre_p(l, m, x) - (l + m) * legendre_p(l - 1, m, x);
          const double scale = std::max({1.0, std::abs(lhs), std::abs((l + m) * legendre_p(l - 1, m, x))});
          worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    CHECK(worst <= 1e-10);
  }
}
