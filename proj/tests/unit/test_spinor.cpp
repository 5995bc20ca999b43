#include <doctest.h>

#include <numbers>
#include <random>

#include "cliffwave/matrix_rep.hpp"
#include "cliffwave/spinor.hpp"
#include "support.hpp"

using namespace cliffwave;
using cwtest::random_ceven;
using cwtest::random_even;

namespace {

// gamma5 x g21 through the matrix representation.
CMultivector chirality_oracle(const CMultivector& x) {
  return from_matrix(matrix_rep(Multivector::pseudoscalar()) * matrix_rep(x) * gamma_matrix(2) * gamma_matrix(1));
}

// Field polynomial in x with random even coefficients.
RealField polynomial_field(std::mt19937_64& rng) {
  const Multivector c0 = random_even(rng), c1 = random_even(rng), c2 = random_even(rng), c3 = random_even(rng);
  return [=](const Point4& p) {
    return c0 + c1 * p[1] + c2 * (p[2] * p[3]) + c3 * (p[1] * p[1] * p[0]);
  };
}

Point4 random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_SUITE("spinor_ops") {
  TEST_CASE("Weyl projection of 1") {
    const Multivector g03 = Multivector::product_of({0, 3});
    CHECK((chirality_oracle(CMultivector(1.0)) - CMultivector(g03)).norm() < 1e-14);
    const auto f = weyl_project(Multivector(1.0), Handedness::plus);
    CHECK((f.value - (Multivector(1.0) - g03) * 0.5).norm() < 1e-15);
    CHECK(chirality_residual(f) < 1e-15);
    CHECK(null_check(f) < 1e-15);
    // (1 + g03)(1 - g03) / 4 = 0
    CHECK(((Multivector(1.0) + g03) * (Multivector(1.0) - g03)).norm() == 0.0);
  }

  TEST_CASE("Weyl projection of zero and rejection of odd input") {
    CHECK(weyl_project(Multivector{}, Handedness::minus).value.norm() == 0.0);
    CHECK_THROWS_AS(weyl_project(Multivector::gamma(1), Handedness::plus), DomainError);
  }

  TEST_CASE("projector algebra on random even multivectors") {
    std::mt19937_64 rng(cwtest::kSeed + 10);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const CMultivector psi = random_ceven(rng);
      const auto fp = weyl_project(psi, Handedness::plus);
      const auto fm = weyl_project(psi, Handedness::minus);
      worst = std::max(worst, (fp.value + fm.value - psi).norm());
      worst = std::max(worst, (weyl_project(fp.value, Handedness::plus).value - fp.value).norm());
      worst = std::max(worst, (weyl_project(fm.value, Handedness::minus).value - fm.value).norm());
      worst = std::max(worst, weyl_project(fp.value, Handedness::minus).value.norm());
      worst = std::max(worst, weyl_project(fm.value, Handedness::plus).value.norm());
      worst = std::max(worst, chirality_residual(fp));
      worst = std::max(worst, chirality_residual(fm));
      worst = std::max(worst, null_check(fp));
      worst = std::max(worst, null_check(fm));
      // Oracle: F+ = (psi - gamma5 psi g21) / 2 through matrices.
      worst = std::max(worst, (fp.value - (psi - chirality_oracle(psi)) * cplx(0.5)).norm());
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("projection is idempotent against a brute-force basis sweep") {
    for (int mask = 0; mask < 16; ++mask) {
      if (Blade(static_cast<std::uint8_t>(mask)).grade() % 2) continue;
      const Multivector e = Multivector::blade(Blade(static_cast<std::uint8_t>(mask)));
      for (auto h : {Handedness::plus, Handedness::minus}) {
        const Multivector p = weyl_project(e, h).value;
        CHECK((weyl_project(p, h).value - p).norm() < 1e-15);
      }
    }
  }

  TEST_CASE("chirality residual detects non-Weyl values") {
    CHECK(chirality_residual(WeylValue{Multivector(1.0), Handedness::plus}) > 0.5);
    CHECK(chirality_residual(WeylValue{Multivector{}, Handedness::plus}) == 0.0);
    CHECK(null_check(WeylValue{Multivector(1.0), Handedness::plus}) == doctest::Approx(2.0));
  }

  TEST_CASE("parity of constant fields") {
    const RealField a = [](const Point4&) { return Multivector::product_of({0, 1}); };
    const RealField b = [](const Point4&) { return Multivector::product_of({1, 2}); };
    const Point4 p{0.3, 1.0, -2.0, 0.5};
    CHECK(parity(a)(p) == Multivector::product_of({0, 1}));
    CHECK(parity(b)(p) == -Multivector::product_of({1, 2}));
  }

  TEST_CASE("parity is an involution on polynomial fields") {
    std::mt19937_64 rng(cwtest::kSeed + 11);
    for (int i = 0; i < 50; ++i) {
      const RealField f = polynomial_field(rng);
      const RealField pp = parity(parity(f));
      const Point4 p = random_point(rng);
      CHECK(cwtest::rel_err(pp(p), f(p)) < 1e-12);
    }
  }

  TEST_CASE("parity eigenstates have eigenvalues +1 and -1") {
    std::mt19937_64 rng(cwtest::kSeed + 12);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto [up, down] = parity_eigenstates(polynomial_field(rng));
      const RealField pu = parity(up), pd = parity(down);
      for (int j = 0; j < 5; ++j) {
        const Point4 p = random_point(rng);
        worst = std::max(worst, cwtest::rel_err(pu(p), up(p)));
        worst = std::max(worst, cwtest::rel_err(pd(p), -down(p)));
      }
    }
    CHECK(worst <= 1e-12);

    const auto [z_up, z_down] = parity_eigenstates(RealField([](const Point4&) { return Multivector{}; }));
    CHECK(z_up({1, 2, 3, 4}).norm() == 0.0);
    CHECK(z_down({1, 2, 3, 4}).norm() == 0.0);
  }

  TEST_CASE("parity eigenstates of constant fields match the matrix oracle") {
    std::mt19937_64 rng(cwtest::kSeed + 13);
    const Matrix4c& g0 = gamma_matrix(0);
    for (int i = 0; i < 50; ++i) {
      const Multivector psi = random_even(rng);
      const auto [up, down] = parity_eigenstates(RealField([psi](const Point4&) { return psi; }));
      const CMultivector pm(psi);
      const CMultivector minus_part = (pm + chirality_oracle(pm)) * cplx(0.5);
      const CMultivector plus_part = (pm - chirality_oracle(pm)) * cplx(0.5);
      const CMultivector up_oracle = from_matrix(g0 * matrix_rep(minus_part) * g0) - minus_part;
      const CMultivector down_oracle = from_matrix(g0 * matrix_rep(plus_part) * g0) + plus_part;
      CHECK((CMultivector(up({0, 0.5, 0, 0})) - up_oracle).norm() < 1e-13);
      CHECK((CMultivector(down({0, 0.5, 0, 0})) - down_oracle).norm() < 1e-13);
    }
  }

  TEST_CASE("Weyl currents are null vectors") {
    const auto f = weyl_project(Multivector(1.0), Handedness::plus);
    const Multivector j = current(f);
    CHECK((j - j.grade(1)).norm() < 1e-15);
    CHECK(std::abs(scalar_product(j, j)) < 1e-15);
    CHECK(current(Multivector{}).norm() == 0.0);

    std::mt19937_64 rng(cwtest::kSeed + 14);
    for (int i = 0; i < 100; ++i) {
      const Handedness h = i % 2 ? Handedness::plus : Handedness::minus;
      const Multivector fv = weyl_project(random_even(rng), h).value;
      const CMultivector jo = from_matrix(matrix_rep(fv) * gamma_matrix(0) * matrix_rep(fv.reverse()));
      const Multivector jj = current(fv);
      CHECK((CMultivector(jj) - jo).norm() < 1e-13);
      CHECK((jj - jj.grade(1)).norm() < 1e-13);
      CHECK(std::abs(scalar_product(jj, jj)) < 1e-12 * std::max(1.0, jj.norm() * jj.norm()));
    }
  }

  TEST_CASE("polar decomposition") {
    const PolarForm two = polar_decompose(Multivector(2.0));
    CHECK(two.rho == doctest::Approx(4.0));
    CHECK(two.beta == doctest::Approx(0.0));
    CHECK((two.rotor.value() - Multivector(1.0)).norm() < 1e-15);

    const PolarForm g5 = polar_decompose(blades::g5());
    CHECK(g5.rho == doctest::Approx(1.0));
    CHECK(g5.beta == doctest::Approx(std::numbers::pi));
    CHECK((g5.reconstruct() - blades::g5()).norm() < 1e-12);

    const Rotor r = Rotor::from_bivector(Multivector::product_of({1, 2}) * 0.8)
                        .compose(Rotor::from_bivector(Multivector::product_of({0, 3}) * 0.5));
    const PolarForm pr = polar_decompose(r.value());
    CHECK(pr.rho == doctest::Approx(1.0));
    CHECK(std::abs(pr.beta) < 1e-12);
    CHECK((pr.rotor.value() - r.value()).norm() < 1e-12);

    std::mt19937_64 rng(cwtest::kSeed + 15);
    for (int i = 0; i < 200; ++i) {
      const Multivector psi = random_even(rng);
      const PolarForm pf = polar_decompose(psi);
      CHECK(pf.rho > 0.0);
      CHECK(pf.beta > -std::numbers::pi);
      CHECK(pf.beta <= std::numbers::pi);
      CHECK(cwtest::rel_err(pf.reconstruct(), psi) <= 1e-10);
      const Multivector v = pf.velocity();
      CHECK(scalar_product(v, v) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(v.vector_part()[0] > 0.0);
    }
  }

  TEST_CASE("polar decomposition rejects singular spinors") {
    std::mt19937_64 rng(cwtest::kSeed + 16);
    const Multivector f = weyl_project(random_even(rng), Handedness::plus).value;
    CHECK_THROWS_AS(polar_decompose(f), SingularSpinorError);
    CHECK_THROWS_AS(polar_decompose(Multivector{}), SingularSpinorError);
  }

  TEST_CASE("frame change") {
    std::mt19937_64 rng(cwtest::kSeed + 17);
    const Rotor u = Rotor::from_bivector(Multivector::product_of({1, 2}) * 0.9);
    const Rotor w = Rotor::from_bivector(Multivector::product_of({0, 1}) * -0.4);
    const Multivector psi = random_even(rng);

    CHECK(cwtest::rel_err(change_frame(psi, u, u), psi) < 1e-14);

    // Composition: from -> u -> w equals from -> w.
    const Multivector via = change_frame(change_frame(psi, Rotor::identity(), u), u, w);
    CHECK(cwtest::rel_err(via, change_frame(psi, Rotor::identity(), w)) < 1e-13);

    // Observables with frame-transformed Gamma are frame independent.
    const Multivector moved = change_frame(psi, Rotor::identity(), u);
    for (int mu = 0; mu < 4; ++mu) {
      const Multivector gamma_in_u = u.inverse() * Multivector::gamma(mu) * u.value();
      CHECK(cwtest::rel_err(moved * gamma_in_u * moved.reverse(), psi * Multivector::gamma(mu) * psi.reverse()) <
            1e-13);
    }

    // A rotation frame change rotates the current built on the new frame's time axis.
    const double th = 0.6;
    const Rotor rot = Rotor::from_bivector(Multivector::product_of({1, 2}) * th);
    const Multivector p2 = change_frame(psi, Rotor::identity(), rot);
    const CMultivector oracle =
        from_matrix(matrix_rep(psi) * matrix_rep(rot.transform(Multivector::gamma(0))) * matrix_rep(psi.reverse()));
    CHECK((CMultivector(current(p2)) - oracle).norm() < 1e-13);

    CHECK_THROWS_AS(Rotor::make(Multivector(2.0)), DomainError);
    CHECK_THROWS_AS(Rotor::make(Multivector::gamma(0)), DomainError);
  }
}
