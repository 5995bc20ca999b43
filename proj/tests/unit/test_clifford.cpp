#include <doctest.h>

#include <random>

#include "cliffwave/clifford.hpp"
#include "cliffwave/matrix_rep.hpp"
#include "support.hpp"

using namespace cliffwave;
using cwtest::random_cmv;
using cwtest::random_mv;

TEST_SUITE("clifford_core") {
  TEST_CASE("generators square to the metric") {
    CHECK(Multivector::gamma(0) * Multivector::gamma(0) == Multivector(1.0));
    for (int k = 1; k < 4; ++k) CHECK(Multivector::gamma(k) * Multivector::gamma(k) == Multivector(-1.0));
  }

  TEST_CASE("anticommutation g_mu g_nu + g_nu g_mu = 2 eta_mu_nu") {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        const Multivector a = Multivector::gamma(mu), b = Multivector::gamma(nu);
        const double eta = mu == nu ? kMetric[mu] : 0.0;
        CHECK(a * b + b * a == Multivector(2.0 * eta));
      }
  }

  TEST_CASE("pseudoscalar squares to -1 in both products") {
    CHECK(blades::g5() * blades::g5() == Multivector(-1.0));
    const Matrix4c m = matrix_rep(blades::g5());
    CHECK((m * m + Matrix4c::Identity()).norm() < 1e-14);
    CHECK(Multivector::product_of({0, 1, 2, 3}) == blades::g5());
  }

  TEST_CASE("identity element") {
    std::mt19937_64 rng(cwtest::kSeed);
    for (int i = 0; i < 20; ++i) {
      const Multivector a = random_mv(rng);
      CHECK(Multivector(1.0) * a == a);
      CHECK(a * Multivector(1.0) == a);
    }
  }

  TEST_CASE("canonical blade order") {
    const std::array<std::uint8_t, 16> expected = {0,   1,   2,   4,   8,   3,   5,   9,
                                                   6,   10,  12,  7,   11,  13,  14,  15};
    CHECK(kCanonicalBladeMasks == expected);
    CHECK(blade_name(0b1011) == "g013");
    CHECK(blade_name(0) == "1");
  }

  TEST_CASE("grade projection") {
    const Multivector a = Multivector(1.0) + Multivector::product_of({0, 1});
    CHECK(a.grade(2) == Multivector::product_of({0, 1}));
    CHECK(a.grade(0) == Multivector(1.0));
    CHECK_THROWS_AS((void)a.grade(5), DomainError);
    CHECK_THROWS_AS((void)a.grade(-1), DomainError);

    std::mt19937_64 rng(cwtest::kSeed + 1);
    for (int i = 0; i < 50; ++i) {
      const Multivector b = random_mv(rng);
      Multivector sum;
      for (int r = 0; r <= 4; ++r) {
        CHECK(b.grade(r).grade(r) == b.grade(r));
        sum += b.grade(r);
      }
      CHECK(sum == b);
    }
  }

  TEST_CASE("reverse signs and anti-automorphism") {
    CHECK(Multivector::product_of({0, 1}).reverse() == -Multivector::product_of({0, 1}));
    CHECK(Multivector(3.0).reverse() == Multivector(3.0));
    CHECK(blades::g5().reverse() == blades::g5());
    CHECK(Multivector::product_of({0, 1, 2}).reverse() == -Multivector::product_of({0, 1, 2}));

    std::mt19937_64 rng(cwtest::kSeed + 2);
    for (int i = 0; i < 200; ++i) {
      const Multivector a = random_mv(rng), b = random_mv(rng);
      CHECK(cwtest::rel_err((a * b).reverse(), b.reverse() * a.reverse()) < 1e-13);
      CHECK(a.reverse().reverse() == a);
    }
  }

  TEST_CASE("wedge and left contraction on vectors") {
    const Multivector g0 = Multivector::gamma(0), g1 = Multivector::gamma(1);
    CHECK(wedge(g0, g1) == Multivector::product_of({0, 1}));
    CHECK(left_contract(g0, g0) == Multivector(1.0));
    CHECK(left_contract(g1, g1) == Multivector(-1.0));
    CHECK(left_contract(g0, Multivector::product_of({0, 1})) == g1);
    CHECK(left_contract(g1, Multivector::product_of({0, 1})) == g0);  // g1 g0 g1 = g0

    std::mt19937_64 rng(cwtest::kSeed + 3);
    for (int i = 0; i < 200; ++i) {
      const Multivector u = random_mv(rng).grade(1), v = random_mv(rng).grade(1);
      CHECK(cwtest::rel_err(u * v, left_contract(u, v) + wedge(u, v)) < 1e-14);
      // Oracle: symmetric and antisymmetric parts of the matrix product.
      const Matrix4c mu = matrix_rep(u), mv = matrix_rep(v);
      const CMultivector dot = from_matrix(0.5 * (mu * mv + mv * mu));
      const CMultivector wed = from_matrix(0.5 * (mu * mv - mv * mu));
      CHECK((dot - CMultivector(left_contract(u, v))).norm() < 1e-13);
      CHECK((wed - CMultivector(wedge(u, v))).norm() < 1e-13);
    }
  }

  TEST_CASE("contractions lower and wedge raises grade") {
    std::mt19937_64 rng(cwtest::kSeed + 4);
    for (int r = 0; r <= 4; ++r)
      for (int s = 0; s <= 4; ++s) {
        const Multivector a = random_mv(rng).grade(r), b = random_mv(rng).grade(s);
        const Multivector w = wedge(a, b), lc = left_contract(a, b), rc = right_contract(a, b);
        CHECK((w - (r + s <= 4 ? w.grade(r + s) : Multivector{})).norm() < 1e-14);
        CHECK((lc - (s >= r ? lc.grade(s - r) : Multivector{})).norm() < 1e-14);
        CHECK((rc - (r >= s ? rc.grade(r - s) : Multivector{})).norm() < 1e-14);
        if (s >= r) CHECK(cwtest::rel_err(lc, (a * b).grade(s - r)) < 1e-14);
        if (r >= s) CHECK(cwtest::rel_err(rc, (a * b).grade(r - s)) < 1e-14);
      }
  }

  TEST_CASE("matrix representation is a faithful homomorphism") {
    CHECK((matrix_rep(Multivector(1.0)) - Matrix4c::Identity()).norm() == 0.0);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        const Matrix4c& a = gamma_matrix(mu);
        const Matrix4c& b = gamma_matrix(nu);
        const double eta = mu == nu ? kMetric[mu] : 0.0;
        CHECK((a * b + b * a - 2.0 * eta * Matrix4c::Identity()).norm() < 1e-15);
      }

    std::mt19937_64 rng(cwtest::kSeed + 5);
    double worst_product = 0.0, worst_round_trip = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const CMultivector a = random_cmv(rng), b = random_cmv(rng);
      const CMultivector via_matrix = from_matrix(matrix_rep(a) * matrix_rep(b));
      const CMultivector direct = a * b;
      worst_product = std::max(worst_product, (via_matrix - direct).max_abs() / std::max(1.0, direct.max_abs()));
      worst_round_trip = std::max(worst_round_trip, (from_matrix(matrix_rep(a)) - a).max_abs());
    }
    CHECK(worst_product <= 1e-12);
    CHECK(worst_round_trip <= 1e-13);
  }

  TEST_CASE("product is associative and bilinear") {
    std::mt19937_64 rng(cwtest::kSeed + 6);
    for (int i = 0; i < 200; ++i) {
      const CMultivector a = random_cmv(rng), b = random_cmv(rng), c = random_cmv(rng);
      CHECK(cwtest::rel_err((a * b) * c, a * (b * c)) < 1e-13);
      const cplx s(0.3, -1.2);
      CHECK(cwtest::rel_err(a * (b * s + c), (a * b) * s + a * c) < 1e-13);
    }
  }

  TEST_CASE("gamma5 commutes with even and anticommutes with odd blades") {
    const Multivector g5 = blades::g5();
    for (int mask = 0; mask < 16; ++mask) {
      const Multivector e = Multivector::blade(Blade(static_cast<std::uint8_t>(mask)));
      const bool even = Blade(static_cast<std::uint8_t>(mask)).grade() % 2 == 0;
      if (even)
        CHECK(g5 * e == e * g5);
      else
        CHECK(g5 * e == -(e * g5));
    }
  }

  TEST_CASE("exp of gamma5 and simple elements") {
    CHECK((exp_gamma5(0.0) - Multivector(1.0)).norm() < 1e-16);
    CHECK((exp_gamma5(std::numbers::pi) + Multivector(1.0)).norm() < 1e-15);
    // Series oracle for exp(theta g5).
    const double th = 0.7;
    Multivector term(1.0), sum(1.0);
    for (int k = 1; k < 30; ++k) {
      term = term * blades::g5() * (th / k);
      sum += term;
    }
    CHECK((exp_simple(blades::g5() * th) - sum).norm() < 1e-14);
    CHECK((exp_gamma5(th) - sum).norm() < 1e-14);
    // A boost generator squares to +1.
    const Multivector boost = exp_simple(Multivector::product_of({0, 3}) * 0.4);
    CHECK(std::abs(boost.scalar() - std::cosh(0.4)) < 1e-15);
    CHECK_THROWS_AS((void)exp_simple(Multivector(1.0) + blades::g5()), DomainError);
  }

  TEST_CASE("scalar product is the Minkowski inner product on vectors") {
    const Multivector a = Multivector::vector({1, 2, 3, 4}), b = Multivector::vector({2, 1, 0, -1});
    CHECK(scalar_product(a, b) == doctest::Approx(1 * 2 - 2 * 1 - 0 + 4));
    CHECK(scalar_product(a, b) == doctest::Approx((a * b).scalar()));
  }
}
