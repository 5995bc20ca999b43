#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cliffwave/errors.hpp"
#include "cliffwave/field_calculus.hpp"
#include "cliffwave/xpulse.hpp"
#include "support.hpp"

using namespace cliffwave;

namespace {

constexpr cplx kI{0.0, 1.0};

XPulseParams params(double eta, double T = 0.5, double omega0 = 10.0, double sigma = 1.0) {
  XPulseParams p;
  p.eta = eta;
  p.T = T;
  p.spectrum = Spectrum::gaussian(omega0, sigma);
  p.quadrature.abs_tol = 1e-11;
  return p;
}

// int D(w) J0(w rho sin eta) e^{-i w tau} dw by composite Simpson with the
// power-series J0; independent of the library's Bessel and quadrature code.
cplx simpson_profile(double omega0, double sigma, double eta, double tau, double rho) {
  const double lo = omega0 - 6 * sigma, hi = omega0 + 6 * sigma;
  const int n = 4000;
  const double h = (hi - lo) / n;
  cplx s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = lo + i * h;
    const double u = (w - omega0) / sigma;
    const double c = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += c * std::exp(-0.5 * u * u) * cwtest::series_j(0, w * rho * std::sin(eta)) * std::exp(-kI * w * tau);
  }
  return s * (h / 3);
}

std::vector<double> front_times() {
  std::vector<double> ts;
  for (int i = 0; i < 10; ++i) ts.push_back(1.0 + 0.3 * i);
  return ts;
}

}  // namespace

TEST_SUITE("xpulse") {
  TEST_CASE("gate with half value on the sheet") {
    CHECK(gate(0.0, 1.0) == 1.0);
    CHECK(gate(0.999, 1.0) == 1.0);
    CHECK(gate(1.0, 1.0) == 0.5);
    CHECK(gate(-1.0, 1.0) == 0.5);
    CHECK(gate(1.001, 1.0) == 0.0);
    CHECK(gate(-7.0, 1.0) == 0.0);
  }

  TEST_CASE("on-axis profile is the truncated Gaussian transform") {
    const XPulseParams p = params(std::numbers::pi / 4);
    // int_{-6}^{6} exp(-u^2/2) du = sqrt(2 pi) erf(6 / sqrt 2)
    const double mass = std::sqrt(2 * std::numbers::pi) * std::erf(6.0 / std::numbers::sqrt2);
    CHECK(std::abs(boundary_profile(p, 0.0, 0.0) - mass) < 1e-10);
    CHECK(std::abs(mass - 2.506628269684983) < 1e-14);
    CHECK(on_axis_peak(p) == doctest::Approx(mass).epsilon(1e-10));
    // Untruncated transform e^{-i w0 t} sqrt(2 pi) e^{-t^2/2}; the cut changes it by < 1e-8.
    for (double t : {-0.4, 0.1, 0.3}) {
      const cplx full = std::exp(-kI * 10.0 * t) * std::sqrt(2 * std::numbers::pi) * std::exp(-0.5 * t * t);
      CHECK(std::abs(boundary_profile(p, t, 0.0) - full) < 1e-7);
    }
  }

  TEST_CASE("off-axis profile against an independent quadrature") {
    for (double eta : {std::numbers::pi / 6, std::numbers::pi / 3}) {
      const XPulseParams p = params(eta);
      for (double rho : {0.05, 0.3, 0.8})
        for (double t : {-0.3, 0.0, 0.2}) {
          const cplx oracle = simpson_profile(10.0, 1.0, eta, t, rho);
          CHECK(std::abs(boundary_profile(p, t, rho) - oracle) < 1e-9);
          CHECK(std::abs(eval_xpulse(p, t, rho, 0.0) - oracle) < 1e-9);
        }
    }
  }

  TEST_CASE("support is confined to the sheet") {
    const XPulseParams p = params(std::numbers::pi / 4);
    const double c = std::cos(p.eta);
    for (double z : {0.0, 0.7, 3.0}) {
      CHECK(eval_xpulse(p, z * c + 0.51, 0.2, z) == cplx(0.0));
      CHECK(eval_xpulse(p, z * c - 0.51, 0.2, z) == cplx(0.0));
      CHECK(std::abs(eval_xpulse(p, z * c + 0.2, 0.2, z)) > 0.1);
    }
    CHECK(boundary_profile(p, 0.6, 0.0) == cplx(0.0));
    CHECK(boundary_normal_derivative(p, -0.6, 0.0) == cplx(0.0));
    // On the sheet the gate contributes 1/2 of the limit from inside.
    const cplx inside = eval_xpulse(p, 0.5 - 1e-12, 0.1, 0.0);
    CHECK(std::abs(eval_xpulse(p, 0.5, 0.1, 0.0) - 0.5 * inside) < 1e-9);
  }

  TEST_CASE("solution depends on t and z only through tau") {
    const XPulseParams p = params(std::numbers::pi / 3);
    const double c = std::cos(p.eta);
    for (double tau : {-0.4, 0.05, 0.35})
      for (double rho : {0.0, 0.4}) {
        const cplx ref = eval_xpulse(p, tau, rho, 0.0);
        for (double z : {0.5, 1.25, 4.0}) CHECK(std::abs(eval_xpulse(p, tau + z * c, rho, z) - ref) < 1e-9);
      }
  }

  TEST_CASE("normal derivative at the aperture") {
    const XPulse x(params(std::numbers::pi / 6));
    for (double t : {-0.2, 0.1})
      for (double rho : {0.0, 0.3}) {
        const cplx dz = boundary_normal_derivative(x.params(), t, rho);
        CHECK(std::abs(x.jet({t, rho, 0.0, 0.0}).grad[3] - dz) < 1e-8);
        // One-sided fourth-order difference into z > 0.
        const double h = 1e-3;
        auto f = [&](double z) { return x.value({t, rho, 0.0, z}); };
        const cplx fd = (-25.0 * f(0) + 48.0 * f(h) - 36.0 * f(2 * h) + 16.0 * f(3 * h) - 3.0 * f(4 * h)) / (12 * h);
        CHECK(std::abs(fd - dz) < 1e-6 * std::abs(dz) + 1e-8);
      }
  }

  TEST_CASE("front travels at 1/cos eta") {
    for (double eta : {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 3}) {
      const XPulseParams p = params(eta);
      const double z_hi = (4.0 + p.T) / std::cos(eta) + 1.0;
      const FrontFit f = track_front(p, front_times(), 0.0, z_hi);
      INFO(eta);
      CHECK(std::abs(f.speed - 1.0 / std::cos(eta)) < 1e-6 / std::cos(eta));
      CHECK(f.fit_rms < 1e-8);
      CHECK(f.speed > 1.0);
      CHECK(f.intercept == doctest::Approx(p.T / std::cos(eta)).epsilon(1e-6));
    }
  }

  TEST_CASE("doubling the gate shifts the front but keeps its speed") {
    const double eta = std::numbers::pi / 4;
    const double z_hi = (4.0 + 1.0) / std::cos(eta) + 1.0;
    const FrontFit a = track_front(params(eta, 0.5), front_times(), 0.0, z_hi);
    const FrontFit b = track_front(params(eta, 1.0), front_times(), 0.0, z_hi);
    CHECK(b.speed == doctest::Approx(a.speed).epsilon(1e-7));
    CHECK(b.intercept - a.intercept == doctest::Approx(0.5 / std::cos(eta)).epsilon(1e-6));
  }

  TEST_CASE("front fit errors") {
    const XPulseParams p = params(std::numbers::pi / 4);
    CHECK_THROWS_AS(track_front(p, {1.0, 2.0, 3.0}, 0.0, 10.0), DomainError);
    CHECK_THROWS_AS(track_front(p, front_times(), 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(track_front(p, front_times(), 0.0, 2.0), NumericalError);
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Spectrum::gaussian(3.0, 1.0), DomainError);
    CHECK_THROWS_AS(Spectrum::gaussian(10.0, 0.0), DomainError);
    XPulseParams p = params(std::numbers::pi / 4);
    p.eta = std::numbers::pi / 2;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.eta = 0.0;
    CHECK_THROWS_AS(XPulse{p}, DomainError);
    p = params(std::numbers::pi / 4);
    p.T = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = params(std::numbers::pi / 4);
    CHECK_THROWS_AS(eval_xpulse(p, 0.0, 0.0, -0.1), DomainError);
    CHECK(p.front_speed() == doctest::Approx(std::numbers::sqrt2));
  }

  TEST_CASE("wave equation holds inside the sheet") {
    const XPulse x(params(std::numbers::pi / 3));
    RefinementSpec s;
    s.lo = {1.0, 0.0, 0.0, 1.6};
    s.hi = {1.2, 0.2, 0.2, 2.0};
    s.base_cells = {4, 4, 4, 4};
    s.levels = 3;
    s.threads = 4;
    s.exclude = [&x](const Point4& p, const std::array<double, 4>& h) {
      return x.sheet_distance(p) <= 2 * (h[0] + h[3]);
    };
    const ResidualReport r = dalembertian_residual(x, s);
    CHECK(r.levels.back().excluded == 0u);
    CHECK(r.order.order == doctest::Approx(2.0).epsilon(0.05));
    CHECK(r.levels.back().rel_rms < 1e-2);

    // Exact partials.
    for (const Point4& p : {Point4{1.05, 0.1, 0.05, 1.7}, Point4{1.15, 0.0, 0.15, 1.9}}) {
      const Jet j = x.jet(p);
      const cplx box = j.hess[0][0] - j.hess[1][1] - j.hess[2][2] - j.hess[3][3];
      CHECK(std::abs(box) < 1e-8 * std::abs(j.hess[0][0]));
    }
  }
}
