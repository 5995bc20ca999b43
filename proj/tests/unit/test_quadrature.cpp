#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cliffwave/quadrature.hpp"

using namespace cliffwave;
using cplx = std::complex<double>;

TEST_SUITE("quadrature") {
  TEST_CASE("low-order Gauss-Legendre rules in closed form") {
    const GaussRule& r2 = gauss_legendre(2);
    REQUIRE(r2.nodes.size() == 2);
    CHECK(std::abs(std::abs(r2.nodes[0]) - 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(r2.nodes[0] == doctest::Approx(-r2.nodes[1]).epsilon(1e-15));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

    const GaussRule& r3 = gauss_legendre(3);
    double wsum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double x = r3.nodes[i];
      if (std::abs(x) < 1e-12) {
        CHECK(r3.weights[i] == doctest::Approx(8.0 / 9).epsilon(1e-15));
      } else {
        CHECK(std::abs(std::abs(x) - std::sqrt(0.6)) < 1e-15);
        CHECK(r3.weights[i] == doctest::Approx(5.0 / 9).epsilon(1e-15));
      }
      wsum += r3.weights[i];
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(gauss_legendre(0), DomainError);
  }

  TEST_CASE("n-point rule integrates monomials up to degree 2n - 1 exactly") {
    for (int n : {1, 4, kPanelOrder, 16}) {
      const GaussRule& r = gauss_legendre(n);
      for (int d = 0; d <= 2 * n - 1; ++d) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], d);
        const double exact = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
        CHECK(std::abs(s - exact) < 1e-14);
      }
      // Degree 2n is not integrated exactly.
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], 2 * n);
      CHECK(std::abs(s - 2.0 / (2 * n + 1)) > 1e-15);
    }
  }

  TEST_CASE("adaptive integration of smooth integrands") {
    const auto s = integrate<double>([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(std::abs(s.value - 2.0) < 1e-12);
    CHECK(s.error_estimate <= 1e-9);
    CHECK(s.evaluations > 0);

    QuadratureOptions tight;
    tight.abs_tol = 0.0;
    tight.rel_tol = 1e-13;
    const auto g = integrate<double>([](double x) { return std::exp(-x * x); }, -8.0, 8.0, tight);
    CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));

    const auto c = integrate<cplx>([](double x) { return std::exp(cplx(0.0, 3.0 * x)); }, 0.0, 2 * std::numbers::pi);
    CHECK(std::abs(c.value) < 1e-12);

    const auto a = integrate<std::array<double, 2>>([](double x) { return std::array<double, 2>{x, x * x}; }, 0.0, 3.0);
    CHECK(a.value[0] == doctest::Approx(4.5).epsilon(1e-14));
    CHECK(a.value[1] == doctest::Approx(9.0).epsilon(1e-14));

    const auto z = integrate<double>([](double) { return 1.0; }, 1.0, 1.0);
    CHECK(z.value == 0.0);
    CHECK(z.evaluations == 0);

    const auto rev = integrate<double>([](double x) { return x; }, 2.0, 0.0);
    CHECK(rev.value == doctest::Approx(-2.0));
  }

  TEST_CASE("non-convergence raises a numerical error") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-14;
    opt.max_panels = 64;
    auto singular = [](double x) { return 1.0 / std::sqrt(x); };
    CHECK_THROWS_AS(integrate<double>(singular, 0.0, 1.0, opt), NumericalError);
    try {
      (void)integrate<double>(singular, 0.0, 1.0, opt);
    } catch (const NumericalError& e) {
      CHECK(std::string(e.what()).find("did not converge") != std::string::npos);
    }
  }
}
