// cliffwave: command-line driver for the verification experiments.
//
// Exit status: 0 when the experiment ran (whatever its verdict), 1 for
// invalid input, 2 for numerical failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffwave/errors.hpp"
#include "experiments.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using cwexp::Report;

struct Globals {
  int threads = 1;
  std::uint64_t seed = 20240917;
  std::string out;
  std::string format = "json";
  bool deterministic = false;
};

ojson number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

ojson to_json(const Report& r, bool deterministic) {
  ojson j;
  j["experiment"] = r.experiment;
  ojson params = ojson::object();
  for (const auto& [k, v] : r.parameters)
    std::visit([&](const auto& x) { params[k] = x; }, v);
  j["parameters"] = params;
  ojson norms = ojson::array();
  for (const auto& n : r.norms)
    norms.push_back({{"h", n.h},
                     {"rms", number(n.rms)},
                     {"max", number(n.max)},
                     {"rel_rms", number(n.rel_rms)},
                     {"scale", number(n.scale)},
                     {"points", n.points},
                     {"excluded", n.excluded}});
  j["norms"] = norms;
  j["order"] = r.order ? number(*r.order) : ojson(nullptr);
  j["exact"] = r.exact;
  ojson metrics = ojson::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = (deterministic && k == "elapsed") ? ojson(0.0) : number(v);
  j["metrics"] = metrics;
  ojson labels = ojson::object();
  for (const auto& [k, v] : r.labels) labels[k] = v;
  j["labels"] = labels;
  ojson rows = ojson::array();
  for (const auto& row : r.table.rows) {
    ojson jr = ojson::array();
    for (double v : row) jr.push_back(number(v));
    rows.push_back(jr);
  }
  j["table"] = {{"columns", r.table.columns}, {"rows", rows}};
  j["verdict"] = r.pass ? "pass" : "fail";
  j["wall_time"] = deterministic ? 0.0 : r.wall_time;
  return j;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  if (!r.table.columns.empty()) {
    for (std::size_t i = 0; i < r.table.columns.size(); ++i) os << (i ? "," : "") << r.table.columns[i];
    os << '\n';
    for (const auto& row : r.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt(row[i]);
      os << '\n';
    }
    return os.str();
  }
  if (!r.norms.empty()) {
    os << "h,rms,max,rel_rms,scale,points,excluded\n";
    for (const auto& n : r.norms)
      os << fmt(n.h) << ',' << fmt(n.rms) << ',' << fmt(n.max) << ',' << fmt(n.rel_rms) << ',' << fmt(n.scale)
         << ',' << n.points << ',' << n.excluded << '\n';
    return os.str();
  }
  os << "metric,value\n";
  for (const auto& [k, v] : r.metrics) os << k << ',' << fmt(v) << '\n';
  return os.str();
}

void emit(const Report& r, const Globals& g) {
  const bool csv = g.format == "csv";
  const std::string text = csv ? to_csv(r) : to_json(r, g.deterministic).dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::filesystem::create_directories(g.out);
    const auto path = std::filesystem::path(g.out) / (r.experiment + (csv ? ".csv" : ".json"));
    std::ofstream f(path);
    if (!f) throw cliffwave::DomainError("cannot write " + path.string());
    f << text;
    std::cerr << r.experiment << ": " << (r.pass ? "pass" : "fail") << " -> " << path.string() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-algebra wave solutions: verification experiments"};
  app.set_config("--config", "", "key = value configuration file; command-line flags override it");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "worker threads for grid sampling")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out, "write <experiment>.json or .csv into this directory instead of stdout");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--deterministic", g.deterministic, "zero timing fields so repeated runs are byte-identical");

  std::function<Report()> run;

  cwexp::VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "residual of a closed-form field on refined grids");
  verify->add_option("--family", vc.family, "bessel | modified-bessel | spherical | axicon | plane-wave | sinh | t2")
      ->capture_default_str();
  verify->add_option("--field", vc.field, "weyl | scalar")->capture_default_str();
  verify->add_option("--n", vc.n, "azimuthal order")->capture_default_str();
  verify->add_option("--omega", vc.omega, "frequency");
  verify->add_option("--k", vc.k, "axial wavenumber");
  verify->add_option("--Omega", vc.Omega, "mass parameter, omega^2 - k^2 = +/- Omega^2");
  verify->add_option("--v", vc.v, "spherical envelope speed")->capture_default_str();
  verify->add_option("--l", vc.l, "spherical degree")->capture_default_str();
  verify->add_option("--m", vc.m, "spherical order")->capture_default_str();
  verify->add_option("--kbar", vc.kbar, "axicon wavenumber")->capture_default_str();
  verify->add_option("--eta", vc.eta, "axicon angle (rad)")->capture_default_str();
  verify->add_option("--reading", vc.reading, "sinh profile: literal | scaled | time-limit")->capture_default_str();
  verify->add_option("--handedness", vc.handedness, "plus | minus")->capture_default_str();
  verify->add_option("--preset", vc.preset, "a | b")->capture_default_str();
  verify->add_option("--scheme", vc.scheme, "order2 | order4")->capture_default_str();
  verify->add_option("--lo", vc.lo, "window corner t x y z")->delimiter(',');
  verify->add_option("--width", vc.width, "window width per axis")->capture_default_str();
  verify->add_option("--base-cells", vc.base_cells, "cells per axis at the coarsest level")->capture_default_str();
  verify->add_option("--refine", vc.refine, "number of levels")->capture_default_str();
  verify->add_option("--min-order", vc.min_order, "observed order required")->capture_default_str();
  verify->add_option("--tol", vc.tol, "bound on the extrapolated relative residual")->capture_default_str();
  verify->callback([&] {
    run = [&] {
      vc.threads = g.threads;
      return cwexp::run_verify(vc);
    };
  });

  cwexp::InvariantsConfig ic;
  auto* inv = app.add_subcommand("invariants", "projector, chirality, null and parity identities on random samples");
  inv->add_option("--samples", ic.samples)->capture_default_str();
  inv->add_option("--tol", ic.tol)->capture_default_str();
  inv->callback([&] {
    run = [&] {
      ic.seed = g.seed;
      return cwexp::run_invariants(ic);
    };
  });

  cwexp::OracleConfig oc;
  auto* oracle = app.add_subcommand("oracle", "geometric product against the 4x4 matrix representation");
  oracle->add_option("--pairs", oc.pairs)->capture_default_str();
  oracle->add_option("--tol", oc.tol)->capture_default_str();
  oracle->callback([&] {
    run = [&] {
      oc.seed = g.seed;
      return cwexp::run_oracle(oc);
    };
  });

  cwexp::EnergyConfig ec;
  auto* energy = app.add_subcommand("energy", "energy density integrals and growth with radius");
  energy->add_option("--family", ec.family, "bessel | spherical | xpulse")->capture_default_str();
  energy->add_option("--region", ec.region, "cylinder | disk | map")->capture_default_str();
  energy->add_option("--n", ec.n)->capture_default_str();
  energy->add_option("--omega", ec.omega);
  energy->add_option("--k", ec.k);
  energy->add_option("--Omega", ec.Omega);
  energy->add_option("--v", ec.v)->capture_default_str();
  energy->add_option("--eta", ec.eta)->capture_default_str();
  energy->add_option("--T", ec.T)->capture_default_str();
  energy->add_option("--omega0", ec.omega0)->capture_default_str();
  energy->add_option("--sigma", ec.sigma)->capture_default_str();
  energy->add_option("--handedness", ec.handedness)->capture_default_str();
  energy->add_option("--preset", ec.preset)->capture_default_str();
  energy->add_option("--radii", ec.radii)->delimiter(',');
  energy->add_option("--t", ec.t)->capture_default_str();
  energy->add_option("--z0", ec.z0)->capture_default_str();
  energy->add_option("--theta-points", ec.theta_points)->capture_default_str();
  energy->add_option("--rel-tol", ec.rel_tol)->capture_default_str();
  energy->add_option("--map-points", ec.map_points)->capture_default_str();
  energy->add_option("--map-extent", ec.map_extent)->capture_default_str();
  energy->add_option("--expect", ec.expect, "bounded | power | divergent; sets the verdict");
  energy->callback([&] { run = [&] { return cwexp::run_energy(ec); }; });

  cwexp::XPulseConfig xc;
  auto* xpulse = app.add_subcommand("xpulse", "aperture reproduction, support and front speed of the X-pulse");
  xpulse->add_option("--eta", xc.eta)->capture_default_str();
  xpulse->add_option("--T", xc.T)->capture_default_str();
  xpulse->add_option("--omega0", xc.omega0)->capture_default_str();
  xpulse->add_option("--sigma", xc.sigma)->capture_default_str();
  xpulse->add_option("--t0", xc.t0)->capture_default_str();
  xpulse->add_option("--dt", xc.dt)->capture_default_str();
  xpulse->add_option("--times", xc.times)->capture_default_str();
  xpulse->add_option("--rho", xc.rho)->delimiter(',');
  xpulse->add_option("--quad-tol", xc.quad_tol)->capture_default_str();
  xpulse->add_option("--quad-max-panels", xc.quad_max_panels)->capture_default_str();
  xpulse->add_option("--speed-tol", xc.speed_tol)->capture_default_str();
  xpulse->add_option("--boundary-tol", xc.boundary_tol)->capture_default_str();
  xpulse->callback([&] { run = [&] { return cwexp::run_xpulse(xc); }; });

  cwexp::AxiconConfig ac;
  auto* axicon = app.add_subcommand("fit-axicon", "axicon angle for a given front speed");
  axicon->add_option("--v", ac.v, "front speed 1/cos(eta)")->capture_default_str();
  axicon->callback([&] { run = [&] { return cwexp::run_fit_axicon(ac); }; });

  cwexp::DispersionConfig dc;
  auto* disp = app.add_subcommand("dispersion", "solve the dispersion relation and report group and phase velocity");
  disp->add_option("--branch", dc.branch, "subluminal | superluminal")->capture_default_str();
  disp->add_option("--Omega", dc.Omega);
  disp->add_option("--omega", dc.omegas)->delimiter(',');
  disp->add_option("--k", dc.ks)->delimiter(',');
  disp->callback([&] { run = [&] { return cwexp::run_dispersion(dc); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    emit(run(), g);
  } catch (const cliffwave::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const cliffwave::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
