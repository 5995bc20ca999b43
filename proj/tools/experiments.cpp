#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "cliffwave/errors.hpp"
#include "cliffwave/matrix_rep.hpp"
#include "cliffwave/observables.hpp"
#include "cliffwave/spinor.hpp"
#include "cliffwave/wave_solutions.hpp"
#include "cliffwave/weyl_construct.hpp"
#include "cliffwave/xpulse.hpp"

namespace cwexp {

using namespace cliffwave;

double Report::metric(const std::string& key) const {
  for (const auto& [k, v] : metrics)
    if (k == key) return v;
  throw DomainError("report has no metric '" + key + "'");
}

const std::string& Report::label(const std::string& key) const {
  for (const auto& [k, v] : labels)
    if (k == key) return v;
  throw DomainError("report has no label '" + key + "'");
}

namespace {

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Handedness parse_handedness(const std::string& s) {
  if (s == "plus" || s == "+") return Handedness::plus;
  if (s == "minus" || s == "-") return Handedness::minus;
  throw DomainError("handedness must be 'plus' or 'minus', got '" + s + "'");
}

WeylPreset parse_preset(const std::string& s) {
  if (s == "a") return WeylPreset::a;
  if (s == "b") return WeylPreset::b;
  throw DomainError("preset must be 'a' or 'b', got '" + s + "'");
}

FdScheme parse_scheme(const std::string& s) {
  if (s == "order2") return FdScheme::order2;
  if (s == "order4") return FdScheme::order4;
  throw DomainError("scheme must be 'order2' or 'order4', got '" + s + "'");
}

Branch parse_branch(const std::string& s) {
  if (s == "subluminal" || s == "sub") return Branch::subluminal;
  if (s == "superluminal" || s == "super") return Branch::superluminal;
  throw DomainError("branch must be 'subluminal' or 'superluminal', got '" + s + "'");
}

SinhReading parse_reading(const std::string& s) {
  if (s == "literal") return SinhReading::literal;
  if (s == "scaled") return SinhReading::scaled;
  if (s == "time-limit") return SinhReading::time_limit;
  throw DomainError("sinh reading must be 'literal', 'scaled' or 'time-limit', got '" + s + "'");
}

// Two of (omega, k, Omega), or none for the family default.
Dispersion family_dispersion(Branch br, std::optional<double> omega, std::optional<double> k,
                             std::optional<double> Omega) {
  const int given = omega.has_value() + k.has_value() + Omega.has_value();
  if (given == 0) {
    if (br == Branch::subluminal) return dispersion_solve(br, {.omega = 5.0, .k = {}, .Omega = 3.0});
    return dispersion_solve(br, {.omega = {}, .k = 5.0, .Omega = 3.0});
  }
  if (given == 1) throw DomainError("give two of --omega, --k, --Omega (or none for the defaults)");
  return dispersion_solve(br, {.omega = omega, .k = k, .Omega = Omega});
}

void put_dispersion(Report& r, const Dispersion& d) {
  r.param("omega", d.omega);
  r.param("k", d.k);
  r.param("Omega", d.Omega);
}

ScalarSolutionPtr make_profile(const VerifyConfig& c, Report& r) {
  const auto& f = c.family;
  if (f == "bessel") {
    const Dispersion d = family_dispersion(Branch::subluminal, c.omega, c.k, c.Omega);
    r.param("n", c.n);
    put_dispersion(r, d);
    return std::make_shared<BesselBeam>(c.n, d);
  }
  if (f == "modified-bessel") {
    const Dispersion d = family_dispersion(Branch::superluminal, c.omega, c.k, c.Omega);
    r.param("n", c.n);
    put_dispersion(r, d);
    return std::make_shared<ModifiedBesselBeam>(c.n, d);
  }
  if (f == "spherical") {
    SphericalBeamParams sp;
    sp.branch = c.v < 1.0 ? Branch::subluminal : Branch::superluminal;
    sp.Omega = c.Omega.value_or(2.0);
    sp.v = c.v;
    sp.l = c.l;
    sp.m = c.m;
    sp.omega = c.omega;
    sp.k = c.k;
    auto beam = std::make_shared<SphericalBeam>(sp);
    r.param("v", c.v);
    r.param("l", c.l);
    r.param("m", c.m);
    r.param("Omega", sp.Omega);
    r.param("omega", beam->omega());
    r.param("k", beam->k());
    return beam;
  }
  if (f == "axicon") {
    r.param("n", c.n);
    r.param("kbar", c.kbar);
    r.param("eta", c.eta);
    return std::make_shared<AxiconBeam>(c.n, c.kbar, c.eta);
  }
  if (f == "plane-wave") {
    const double w = c.omega.value_or(2.0);
    const double k = c.k.value_or(w);
    r.param("omega", w);
    r.param("k", k);
    return std::make_shared<PlaneWave>(w, std::array<double, 3>{0.0, 0.0, k});
  }
  if (f == "sinh") {
    const double Om = c.Omega.value_or(2.0);
    r.param("Omega", Om);
    r.param("reading", c.reading);
    return std::make_shared<SinhProfile>(Om, parse_reading(c.reading));
  }
  if (f == "t2") {
    return std::make_shared<JetExpression>("t^2", [](const Jet& t, const Jet&, const Jet&, const Jet&) { return t * t; });
  }
  throw DomainError("unknown family '" + f +
                    "' (bessel, modified-bessel, spherical, axicon, plane-wave, sinh, t2)");
}

void fill_norms(Report& r, const ResidualReport& rep) {
  for (const LevelNorm& l : rep.levels)
    r.norms.push_back({l.h, l.rms, l.max, l.rel_rms, l.scale, l.points, l.excluded});
  r.exact = rep.order.exact;
  if (!rep.order.exact && std::isfinite(rep.order.order)) r.order = rep.order.order;
}

template <typename V>
double rel_gap(const V& a, const V& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

CMultivector random_cmv(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMultivector m;
  for (int i = 0; i < 16; ++i) m.coeff(i) = cplx(u(rng), u(rng));
  return m;
}

}  // namespace

// ------------------------------------------------------------------ verify

Report run_verify(const VerifyConfig& c) {
  const Stopwatch sw;
  Report r;
  r.experiment = "verify";
  r.param("family", c.family);
  r.param("field", c.field);
  const ScalarSolutionPtr profile = make_profile(c, r);

  if (!(c.width > 0)) throw DomainError("--width must be > 0");
  RefinementSpec s;
  s.lo = c.lo;
  for (int mu = 0; mu < 4; ++mu) s.hi[mu] = c.lo[mu] + c.width;
  s.base_cells = {c.base_cells, c.base_cells, c.base_cells, c.base_cells};
  s.levels = c.refine;
  s.scheme = parse_scheme(c.scheme);
  s.threads = c.threads;
  s.validate();
  r.param("scheme", c.scheme);
  r.param("lo", std::vector<double>(c.lo.begin(), c.lo.end()));
  r.param("width", c.width);
  r.param("base_cells", c.base_cells);
  r.param("refine", c.refine);

  ResidualReport rep;
  if (c.field == "weyl") {
    if (c.family == "t2") throw DomainError("family t2 is a scalar control; use --field scalar");
    const Handedness h = parse_handedness(c.handedness);
    const auto [m, n] = weyl_preset(parse_preset(c.preset), h);
    r.param("handedness", c.handedness);
    r.param("preset", c.preset);
    const WeylField wf(GeneralizedPotential(profile, m, n), h);
    rep = weyl_residual(wf.as_function(), s);
  } else if (c.field == "scalar") {
    rep = dalembertian_residual(*profile, s);
  } else {
    throw DomainError("--field must be 'weyl' or 'scalar', got '" + c.field + "'");
  }
  r.label("profile", profile->name());
  fill_norms(r, rep);
  r.metric("order", rep.order.exact ? 0.0 : rep.order.order);
  r.metric("fit_rms", rep.order.fit_rms);
  r.metric("finest_rel_rms", rep.levels.back().rel_rms);
  r.metric("richardson_rel_rms", rep.richardson_rel_rms);
  r.metric("extrapolated_rel_rms", rep.extrapolated_rel_rms);
  r.param("min_order", c.min_order);
  r.param("tol", c.tol);
  const bool converges = rep.order.exact || (rep.levels.size() >= 3 && rep.order.order >= c.min_order);
  r.pass = converges && std::abs(rep.extrapolated_rel_rms) <= c.tol;
  r.wall_time = sw.seconds();
  return r;
}

// ---------------------------------------------------------- invariants

Report run_invariants(const InvariantsConfig& c) {
  if (c.samples < 1) throw DomainError("--samples must be >= 1");
  const Stopwatch sw;
  Report r;
  r.experiment = "invariants";
  r.param("samples", c.samples);
  r.param("seed", std::to_string(c.seed));
  r.param("tol", c.tol);

  std::mt19937_64 rng(c.seed);
  double sum = 0, idem = 0, cross = 0, chir = 0, null = 0;
  for (int i = 0; i < c.samples; ++i) {
    const CMultivector psi = random_cmv(rng).even_part();
    const auto fp = weyl_project(psi, Handedness::plus);
    const auto fm = weyl_project(psi, Handedness::minus);
    const double s = std::max(1.0, psi.norm());
    sum = std::max(sum, (fp.value + fm.value - psi).norm() / s);
    idem = std::max(idem, (weyl_project(fp.value, Handedness::plus).value - fp.value).norm() / s);
    idem = std::max(idem, (weyl_project(fm.value, Handedness::minus).value - fm.value).norm() / s);
    cross = std::max(cross, weyl_project(fp.value, Handedness::minus).value.norm() / s);
    cross = std::max(cross, weyl_project(fm.value, Handedness::plus).value.norm() / s);
    chir = std::max({chir, chirality_residual(fp) / s, chirality_residual(fm) / s});
    null = std::max({null, null_check(fp) / (s * s), null_check(fm) / (s * s)});
  }

  // Parity on fields polynomial in x: c0 + c1 x + c2 y z + c3 x^2 t + c4 x y z.
  double invol = 0, eig_up = 0, eig_down = 0;
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const int fields = std::max(1, c.samples / 10);
  for (int i = 0; i < fields; ++i) {
    std::array<CMultivector, 5> co;
    for (auto& x : co) x = random_cmv(rng).even_part();
    const ComplexField psi = [co](const Point4& p) {
      return co[0] + co[1] * cplx(p[1]) + co[2] * cplx(p[2] * p[3]) + co[3] * cplx(p[1] * p[1] * p[0]) +
             co[4] * cplx(p[1] * p[2] * p[3]);
    };
    const ComplexField twice = parity(parity(psi));
    const auto [up, down] = parity_eigenstates(psi);
    const ComplexField pup = parity(up), pdown = parity(down);
    for (int j = 0; j < 10; ++j) {
      const Point4 p{u(rng), u(rng), u(rng), u(rng)};
      invol = std::max(invol, rel_gap(twice(p), psi(p)));
      eig_up = std::max(eig_up, rel_gap(pup(p), up(p)));
      eig_down = std::max(eig_down, rel_gap(pdown(p), -down(p)));
    }
  }
  r.metric("projector_sum", sum);
  r.metric("idempotence", idem);
  r.metric("cross_annihilation", cross);
  r.metric("chirality_residual", chir);
  r.metric("null_residual", null);
  r.metric("parity_involution", invol);
  r.metric("parity_eigen_plus", eig_up);
  r.metric("parity_eigen_minus", eig_down);
  r.pass = true;
  for (const auto& [k, v] : r.metrics) r.pass = r.pass && v <= c.tol;
  r.wall_time = sw.seconds();
  r.metric("elapsed", r.wall_time);
  return r;
}

// ---------------------------------------------------------------- oracle

Report run_oracle(const OracleConfig& c) {
  if (c.pairs < 1) throw DomainError("--pairs must be >= 1");
  const Stopwatch sw;
  Report r;
  r.experiment = "oracle";
  r.param("pairs", c.pairs);
  r.param("seed", std::to_string(c.seed));
  r.param("tol", c.tol);
  std::mt19937_64 rng(c.seed);
  double product = 0.0, round_trip = 0.0;
  for (int i = 0; i < c.pairs; ++i) {
    const CMultivector a = random_cmv(rng), b = random_cmv(rng);
    const CMultivector direct = a * b;
    const CMultivector via = from_matrix(matrix_rep(a) * matrix_rep(b));
    product = std::max(product, (direct - via).max_abs());
    round_trip = std::max(round_trip, (from_matrix(matrix_rep(a)) - a).max_abs());
  }
  r.metric("max_product_error", product);
  r.metric("max_round_trip_error", round_trip);
  r.pass = product <= c.tol && round_trip <= c.tol;
  r.wall_time = sw.seconds();
  r.metric("elapsed", r.wall_time);
  return r;
}

// ---------------------------------------------------------------- energy

Report run_energy(const EnergyConfig& c) {
  const Stopwatch sw;
  Report r;
  r.experiment = "energy";
  r.param("family", c.family);
  r.param("region", c.region);
  r.param("t", c.t);

  ScalarSolutionPtr profile;
  if (c.family == "bessel") {
    const Dispersion d = family_dispersion(Branch::subluminal, c.omega, c.k, c.Omega);
    r.param("n", c.n);
    put_dispersion(r, d);
    profile = std::make_shared<BesselBeam>(c.n, d);
  } else if (c.family == "spherical") {
    const double Om = c.Omega.value_or(2.0);
    r.param("v", c.v);
    r.param("Omega", Om);
    profile = std::make_shared<SphericalBeam>(
        SphericalBeam::simple(c.v < 1.0 ? Branch::subluminal : Branch::superluminal, Om, c.v));
  } else if (c.family == "xpulse") {
    XPulseParams p;
    p.eta = c.eta;
    p.T = c.T;
    p.spectrum = Spectrum::gaussian(c.omega0, c.sigma);
    r.param("eta", c.eta);
    r.param("T", c.T);
    r.param("omega0", c.omega0);
    r.param("sigma", c.sigma);
    profile = std::make_shared<XPulse>(p);
  } else {
    throw DomainError("energy family must be 'bessel', 'spherical' or 'xpulse', got '" + c.family + "'");
  }
  const Handedness h = parse_handedness(c.handedness);
  const auto [m, n] = weyl_preset(parse_preset(c.preset), h);
  r.param("handedness", c.handedness);
  r.param("preset", c.preset);
  const WeylField F(GeneralizedPotential(profile, m, n), h);

  EnergyOptions opt;
  opt.theta_points = c.theta_points;
  opt.rel_tol = c.rel_tol;
  r.param("theta_points", c.theta_points);
  r.param("rel_tol", c.rel_tol);

  if (c.region == "map") {
    if (c.map_points < 2) throw DomainError("--map-points must be >= 2");
    if (!(c.map_extent > 0)) throw DomainError("--map-extent must be > 0");
    r.param("z0", c.z0);
    r.param("map_points", c.map_points);
    r.param("map_extent", c.map_extent);
    r.table.columns = {"x", "z", "T00"};
    for (int i = 0; i < c.map_points; ++i)
      for (int j = 0; j < c.map_points; ++j) {
        const double x = -c.map_extent + 2.0 * c.map_extent * i / (c.map_points - 1);
        const double z = c.z0 - c.map_extent + 2.0 * c.map_extent * j / (c.map_points - 1);
        r.table.rows.push_back({x, z, stress_energy(F, {c.t, x, 0.0, z}).T00});
      }
    r.pass = true;
    r.wall_time = sw.seconds();
    return r;
  }

  EnergyReport rep;
  r.param("radii", c.radii);
  if (c.region == "cylinder") {
    rep = energy_sweep(F, c.t, c.radii, opt);
  } else if (c.region == "disk") {
    r.param("z0", c.z0);
    rep = transverse_energy_sweep(F, c.t, c.z0, c.radii, opt);
  } else {
    throw DomainError("--region must be 'cylinder', 'disk' or 'map', got '" + c.region + "'");
  }
  r.table.columns = {"R", "E"};
  for (std::size_t i = 0; i < rep.radii.size(); ++i) r.table.rows.push_back({rep.radii[i], rep.energies[i]});
  r.metric("exponent", rep.exponent);
  r.label("growth", to_string(rep.growth));
  r.label("rule", rep.rule);
  if (!c.expect.empty()) {
    if (c.expect != "bounded" && c.expect != "power" && c.expect != "divergent")
      throw DomainError("--expect must be 'bounded', 'power' or 'divergent'");
    r.param("expect", c.expect);
    r.pass = c.expect == to_string(rep.growth);
  } else {
    r.pass = true;
  }
  r.wall_time = sw.seconds();
  return r;
}

// ---------------------------------------------------------------- xpulse

Report run_xpulse(const XPulseConfig& c) {
  const Stopwatch sw;
  Report r;
  r.experiment = "xpulse";
  XPulseParams p;
  p.eta = c.eta;
  p.T = c.T;
  p.spectrum = Spectrum::gaussian(c.omega0, c.sigma);
  p.quadrature.abs_tol = c.quad_tol;
  p.quadrature.max_panels = c.quad_max_panels;
  p.validate();
  if (c.times < 8) throw DomainError("--times must be >= 8 for the front fit");
  if (!(c.dt > 0)) throw DomainError("--dt must be > 0");
  r.param("eta", c.eta);
  r.param("T", c.T);
  r.param("omega0", c.omega0);
  r.param("sigma", c.sigma);
  r.param("t0", c.t0);
  r.param("dt", c.dt);
  r.param("times", c.times);
  r.param("rho", c.rho);
  r.param("quad_tol", c.quad_tol);
  const XPulse x(p);
  const double ce = std::cos(c.eta);

  // Aperture data reproduced at z = 0.
  double boundary = 0.0, normal = 0.0;
  for (int i = 0; i < 9; ++i) {
    const double t = c.T * (-0.9 + 0.225 * i);
    for (double rho : c.rho) {
      boundary = std::max(boundary, std::abs(eval_xpulse(p, t, rho, 0.0) - boundary_profile(p, t, rho)));
      normal = std::max(normal, std::abs(x.jet({t, rho, 0.0, 0.0}).grad[3] - boundary_normal_derivative(p, t, rho)));
    }
  }
  // Outside the sheet the field vanishes identically.
  double support = 0.0;
  for (double z : {0.0, 1.0, 3.0})
    for (double off : {1e-9, 0.1, c.T})
      for (double sgn : {-1.0, 1.0})
        for (double rho : c.rho)
          support = std::max(support, std::abs(eval_xpulse(p, z * ce + sgn * (c.T + off), rho, z)));
  // Dependence on t and z through tau = t - z cos eta only.
  double tau_gap = 0.0;
  for (double tau : {-0.6 * c.T, 0.0, 0.5 * c.T})
    for (double rho : c.rho) {
      const cplx ref = eval_xpulse(p, tau, rho, 0.0);
      for (double z : {0.5, 2.0, 5.0}) tau_gap = std::max(tau_gap, std::abs(eval_xpulse(p, tau + z * ce, rho, z) - ref));
    }

  std::vector<double> times;
  for (int i = 0; i < c.times; ++i) times.push_back(c.t0 + c.dt * i);
  const double z_hi = (times.back() + c.T) / ce + 1.0;
  const FrontFit fit = track_front(p, times, 0.0, z_hi);
  const double expected = p.front_speed();
  r.table.columns = {"t", "z_front", "z_fit"};
  for (std::size_t i = 0; i < fit.times.size(); ++i)
    r.table.rows.push_back({fit.times[i], fit.positions[i], fit.intercept + fit.speed * fit.times[i]});

  r.metric("boundary_max_error", boundary);
  r.metric("normal_derivative_max_error", normal);
  r.metric("support_max_abs", support);
  r.metric("tau_invariance_max_error", tau_gap);
  r.metric("front_speed", fit.speed);
  r.metric("front_speed_expected", expected);
  r.metric("front_speed_rel_error", std::abs(fit.speed - expected) / expected);
  r.metric("front_speed_stderr", fit.speed_stderr);
  r.metric("front_intercept", fit.intercept);
  r.metric("front_fit_rms", fit.fit_rms);
  r.metric("threshold", fit.threshold);
  r.pass = boundary <= c.boundary_tol && normal <= c.boundary_tol && support == 0.0 && tau_gap <= c.boundary_tol &&
           std::abs(fit.speed - expected) <= c.speed_tol * expected;
  r.wall_time = sw.seconds();
  return r;
}

// ------------------------------------------------------------ fit-axicon

Report run_fit_axicon(const AxiconConfig& c) {
  const Stopwatch sw;
  Report r;
  r.experiment = "fit-axicon";
  r.param("v", c.v);
  const double eta = axicon_fit(c.v);
  const double back = 1.0 / std::cos(eta);
  r.metric("eta", eta);
  r.metric("eta_degrees", eta * 180.0 / std::numbers::pi);
  r.metric("front_speed_from_eta", back);
  r.metric("round_trip_error", std::abs(back - c.v));
  r.pass = std::abs(back - c.v) <= 1e-12 * c.v;
  r.wall_time = sw.seconds();
  return r;
}

// ------------------------------------------------------------ dispersion

Report run_dispersion(const DispersionConfig& c) {
  const Stopwatch sw;
  Report r;
  r.experiment = "dispersion";
  const Branch br = parse_branch(c.branch);
  r.param("branch", to_string(br));
  std::vector<Dispersion> rows;
  if (!c.omegas.empty() && !c.ks.empty()) {
    if (c.omegas.size() != c.ks.size()) throw DomainError("--omega and --k lists must have the same length");
    if (c.Omega) throw DomainError("give --Omega or both --omega and --k lists, not all three");
    for (std::size_t i = 0; i < c.omegas.size(); ++i)
      rows.push_back(dispersion_solve(br, {.omega = c.omegas[i], .k = c.ks[i], .Omega = {}}));
  } else if (!c.omegas.empty() || !c.ks.empty()) {
    if (!c.Omega) throw DomainError("--Omega is required with a single --omega or --k list");
    for (double w : c.omegas) rows.push_back(dispersion_solve(br, {.omega = w, .k = {}, .Omega = c.Omega}));
    for (double k : c.ks) rows.push_back(dispersion_solve(br, {.omega = {}, .k = k, .Omega = c.Omega}));
  } else {
    rows.push_back(family_dispersion(br, {}, {}, c.Omega ? c.Omega : std::optional<double>{}));
  }
  if (c.Omega) r.param("Omega", *c.Omega);
  if (!c.omegas.empty()) r.param("omega", c.omegas);
  if (!c.ks.empty()) r.param("k", c.ks);
  r.table.columns = {"omega", "k", "Omega", "v_group", "v_phase", "v_group_times_v_phase"};
  double worst = 0.0;
  for (const Dispersion& d : rows) {
    const double prod = d.group_velocity() * d.phase_velocity();
    worst = std::max(worst, std::abs(prod - 1.0));
    r.table.rows.push_back({d.omega, d.k, d.Omega, d.group_velocity(), d.phase_velocity(), prod});
  }
  r.metric("max_product_deviation", worst);
  r.pass = worst <= 1e-12;
  r.wall_time = sw.seconds();
  return r;
}

}  // namespace cwexp
