#include "cliffwave/chiral_gauge.hpp"

#include <cmath>

namespace cliffwave {

namespace {

const CMultivector& g5c() {
  static const CMultivector m = CMultivector::pseudoscalar();
  return m;
}
const CMultivector& g21c() {
  static const CMultivector m = CMultivector::product_of({2, 1});
  return m;
}

double derivative_scale(const std::array<CMultivector, 4>& d) {
  double s = 0.0;
  for (const auto& v : d) s += v.norm() * v.norm();
  return std::sqrt(s);
}

// d X + s g gamma5 B X from stencil data of X.
CMultivector coupled(const std::array<CMultivector, 4>& d, const CMultivector& value, const CMultivector& B,
                     double s, double g) {
  return dirac_from_partials(d) + cplx(s * g) * (g5c() * B * value);
}

std::array<CMultivector, 4> project_all(const std::array<CMultivector, 4>& d, Handedness h) {
  std::array<CMultivector, 4> out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = weyl_project(d[mu], h).value;
  return out;
}

}  // namespace

GaugeFunction GaugeFunction::constant(double c) {
  return {[c](const Point4&) { return c; }, [](const Point4&) { return std::array<double, 4>{}; }};
}

GaugeFunction GaugeFunction::linear(const std::array<double, 4>& k, double c) {
  return {[k, c](const Point4& p) { return k[0] * p[0] + k[1] * p[1] + k[2] * p[2] + k[3] * p[3] + c; },
          [k](const Point4&) { return k; }};
}

GaugeFunction GaugeFunction::sum(const GaugeFunction& a, const GaugeFunction& b) {
  return {[a, b](const Point4& p) { return a.value(p) + b.value(p); },
          [a, b](const Point4& p) {
            auto ga = a.gradient(p);
            const auto gb = b.gradient(p);
            for (int mu = 0; mu < 4; ++mu) ga[mu] += gb[mu];
            return ga;
          }};
}

Multivector GaugeFunction::dirac(const Point4& p) const { return Multivector::vector(gradient(p)); }

Multivector GaugeConfig::B_at(const Point4& p) const {
  if (!B) return Multivector{};
  return B(p);
}

ComplexField duality_transform(ComplexField F, double angle) {
  const CMultivector e = exp_gamma5<cplx>(angle);
  return [F = std::move(F), e](const Point4& p) { return e * F(p); };
}

ComplexField duality_transform(ComplexField F, const GaugeFunction& angle) {
  return [F = std::move(F), angle](const Point4& p) { return exp_gamma5<cplx>(angle.value(p)) * F(p); };
}

ResidualReport coupled_residual(const ComplexField& F, const GaugeConfig& cfg, Handedness h,
                                const RefinementSpec& spec) {
  const double s = sign_of(h);
  PointOp<CMultivector> op = [&cfg, s](const StencilData<CMultivector>& d) {
    const CMultivector B(cfg.B_at(d.p));
    const CMultivector r = coupled(d.d1, d.value, B, s, cfg.g);
    const double sc = std::hypot(derivative_scale(d.d1), cfg.g * (B * d.value).norm());
    return std::pair{r.norm(), sc};
  };
  return residual_report<CMultivector>(std::string("coupled") + to_string(h), F, spec, false, op);
}

GaugedField gauge_transform(ComplexField F, const GaugeConfig& cfg, const GaugeFunction& theta, Handedness h) {
  const double g = cfg.g;
  const double s = sign_of(h);
  GaugedField out;
  out.F = [F = std::move(F), theta, g](const Point4& p) {
    return F(p) * exp_gamma5<cplx>(g * theta.value(p));
  };
  out.cfg.g = g;
  out.cfg.B = [B = cfg.B, theta, s](const Point4& p) {
    Multivector b = B ? B(p) : Multivector{};
    return b + theta.dirac(p) * s;
  };
  return out;
}

ParitySplitReport parity_split_check(const ComplexField& F, const GaugeConfig& cfg, const RefinementSpec& spec) {
  const double g = cfg.g;
  auto split_op = [&cfg, g](Handedness h) {
    return PointOp<CMultivector>([&cfg, g, h](const StencilData<CMultivector>& d) {
      const CMultivector B(cfg.B_at(d.p));
      const auto dp = project_all(d.d1, h);
      const CMultivector v = weyl_project(d.value, h).value;
      const CMultivector r = coupled(dp, v, B, sign_of(h), g);
      return std::pair{r.norm(), std::hypot(derivative_scale(dp), g * (B * v).norm())};
    });
  };
  auto combined = [&cfg, g](const StencilData<CMultivector>& d) {
    const CMultivector B(cfg.B_at(d.p));
    CMultivector r = dirac_from_partials(d.d1) * g21c() + cplx(g) * (B * d.value);
    return r;
  };

  ParitySplitReport rep;
  rep.plus = residual_report<CMultivector>("parity-split+", F, spec, false, split_op(Handedness::plus));
  rep.minus = residual_report<CMultivector>("parity-split-", F, spec, false, split_op(Handedness::minus));
  rep.combined = residual_report<CMultivector>(
      "parity-combined", F, spec, false, PointOp<CMultivector>([&](const StencilData<CMultivector>& d) {
        return std::pair{combined(d).norm(), std::hypot(derivative_scale(d.d1), g * (CMultivector(cfg.B_at(d.p)) * d.value).norm())};
      }));

  PointOp<CMultivector> identity = [&](const StencilData<CMultivector>& d) {
    const CMultivector B(cfg.B_at(d.p));
    const CMultivector rp =
        coupled(project_all(d.d1, Handedness::plus), weyl_project(d.value, Handedness::plus).value, B, 1.0, g);
    const CMultivector rm =
        coupled(project_all(d.d1, Handedness::minus), weyl_project(d.value, Handedness::minus).value, B, -1.0, g);
    const CMultivector c = combined(d);
    return std::pair{(c - g5c() * (rm - rp)).norm(), c.norm()};
  };
  const int finest = spec.levels - 1;
  const LevelNorm n = sweep_level<CMultivector>(F, spec.window(finest), spec.scheme, false, identity, spec);
  rep.identity_max = n.max;
  rep.identity_scale = n.scale;
  return rep;
}

double chirality_rewrite_check(const ComplexField& F, Handedness h, const RefinementSpec& spec) {
  spec.validate();
  const double s = sign_of(h);
  PointOp<CMultivector> op = [s](const StencilData<CMultivector>& d) {
    CMultivector a, b;
    for (int mu = 0; mu < 4; ++mu) {
      const CMultivector g = CMultivector::gamma(mu);
      a += g * d.d1[mu] * g21c();
      b += g * (g5c() * d.d1[mu]);
    }
    return std::pair{(a - cplx(s) * b).norm(), a.norm()};
  };
  return sweep_level<CMultivector>(F, spec.window(spec.levels - 1), spec.scheme, false, op, spec).max;
}

}  // namespace cliffwave
