#include "cliffwave/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cliffwave/errors.hpp"
#include "cliffwave/quadrature.hpp"

namespace cliffwave {

namespace {

const Multivector& g21() {
  static const Multivector m = Multivector::product_of({2, 1});
  return m;
}

StressEnergy assemble(const Multivector& F, const std::array<Multivector, 4>& dF) {
  static const Multivector g210 = Multivector::product_of({2, 1, 0});
  const Multivector rev = F.reverse();
  StressEnergy s;
  for (int mu = 0; mu < 4; ++mu) {
    const Multivector full = dF[mu] * g210 * rev;
    s.T[mu] = full.grade(1);
    s.leakage = std::max(s.leakage, (full - s.T[mu]).norm());
  }
  s.T00 = scalar_product(s.T[0], Multivector::gamma(0));
  return s;
}

std::string rule_name(const EnergyOptions& opt) {
  std::ostringstream os;
  os << "gauss-legendre-" << kPanelOrder << " composite (panel doubling, rel_tol " << opt.rel_tol
     << ") x trapezoid-" << opt.theta_points << " in theta";
  return os.str();
}

}  // namespace

Multivector to_real_spinor(const CMultivector& f) { return real_part(f) + imag_part(f) * g21(); }

double StressEnergy::component(int mu, int nu) const { return scalar_product(T.at(mu), Multivector::gamma(nu)); }

double StressEnergy::asymmetry() const {
  double a = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) a = std::max(a, std::abs(component(mu, nu) - component(nu, mu)));
  return a;
}

StressEnergy stress_energy(const FieldJet& f) {
  std::array<Multivector, 4> d;
  for (int mu = 0; mu < 4; ++mu) d[mu] = to_real_spinor(f.d[mu]);
  return assemble(to_real_spinor(f.value), d);
}

StressEnergy stress_energy(const AnalyticField& F, const Point4& p) { return stress_energy(F.eval(p)); }

StressEnergy stress_energy_fd(const ComplexField& F, const Point4& p, const std::array<double, 4>& h,
                              FdScheme scheme) {
  FieldJet fj;
  fj.value = F(p);
  fj.d = fd_partials(F, p, h, scheme);
  return stress_energy(fj);
}

const char* to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::bounded:
      return "bounded";
    case GrowthClass::power:
      return "power";
    case GrowthClass::divergent:
      return "divergent";
  }
  return "?";
}

double transverse_energy(const AnalyticField& F, double t, double z0, double R, const EnergyOptions& opt) {
  if (!(R > 0)) throw DomainError("energy window radius must be > 0");
  if (opt.theta_points < 1) throw DomainError("theta_points must be >= 1");
  const int nth = opt.theta_points;
  auto ring = [&](double rho) {
    double s = 0.0;
    for (int j = 0; j < nth; ++j) {
      const double th = 2.0 * std::numbers::pi * j / nth;
      s += stress_energy(F, {t, rho * std::cos(th), rho * std::sin(th), z0}).T00;
    }
    return rho * s * (2.0 * std::numbers::pi / nth);
  };
  QuadratureOptions q;
  q.abs_tol = opt.abs_tol;
  q.rel_tol = opt.rel_tol;
  q.initial_panels = std::max(2, static_cast<int>(std::ceil(opt.panels_per_unit * R)));
  return integrate<double>(ring, 0.0, R, q).value;
}

double energy_integral(const AnalyticField& F, double t, double R, double z0, const EnergyOptions& opt) {
  if (!(R > 0)) throw DomainError("energy window radius must be > 0");
  QuadratureOptions q;
  q.abs_tol = opt.abs_tol;
  q.rel_tol = opt.rel_tol;
  // Beam densities vary slowly along z; panel doubling refines when they do not.
  q.initial_panels = 2;
  return integrate<double>([&](double z) { return transverse_energy(F, t, z, R, opt); }, z0 - R, z0 + R, q).value;
}

EnergyReport classify_growth(std::string region, std::string rule, std::vector<double> radii,
                             std::vector<double> energies) {
  if (radii.size() != energies.size() || radii.size() < 3)
    throw DomainError("growth classification needs at least 3 (R, E) pairs");
  if (!std::is_sorted(radii.begin(), radii.end()) || !(radii.front() > 0))
    throw DomainError("radii must be positive and increasing");
  const double rmax = radii.back();
  if (radii.front() > rmax / 10.0 * (1 + 1e-12)) throw DomainError("radii must span at least a decade");

  EnergyReport rep;
  rep.region = std::move(region);
  rep.rule = std::move(rule);
  rep.radii = std::move(radii);
  rep.energies = std::move(energies);

  const double emax = std::abs(rep.energies.back());
  double scale = 0.0;
  for (double e : rep.energies) scale = std::max(scale, std::abs(e));
  if (scale == 0.0) {
    rep.exponent = 0.0;
    rep.growth = GrowthClass::bounded;
    return rep;
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < rep.radii.size(); ++i) {
    if (rep.radii[i] < rmax / 10.0 * (1 - 1e-12) || rep.energies[i] == 0.0) continue;
    const double x = std::log(rep.radii[i]), y = std::log(std::abs(rep.energies[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  rep.exponent = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;

  // Spread over the last factor of two in R, always including the two largest radii.
  double spread = std::abs(rep.energies[rep.energies.size() - 2] - rep.energies.back());
  for (std::size_t i = 0; i < rep.radii.size(); ++i)
    if (rep.radii[i] >= rmax / 2.0) spread = std::max(spread, std::abs(rep.energies[i] - rep.energies.back()));
  if (rep.exponent > 0.5)
    rep.growth = GrowthClass::divergent;
  else if (spread <= 1e-3 * std::max(emax, 1e-300))
    rep.growth = GrowthClass::bounded;
  else
    rep.growth = GrowthClass::power;
  return rep;
}

EnergyReport energy_sweep(const AnalyticField& F, double t, const std::vector<double>& radii,
                          const EnergyOptions& opt) {
  std::vector<double> e;
  for (double R : radii) e.push_back(energy_integral(F, t, R, 0.0, opt));
  return classify_growth("cylinder", rule_name(opt), radii, std::move(e));
}

EnergyReport transverse_energy_sweep(const AnalyticField& F, double t, double z0, const std::vector<double>& radii,
                                     const EnergyOptions& opt) {
  std::vector<double> e;
  for (double R : radii) e.push_back(transverse_energy(F, t, z0, R, opt));
  return classify_growth("disk", rule_name(opt), radii, std::move(e));
}

}  // namespace cliffwave
