#pragma once

// Experiment runners shared by the command-line tool and the acceptance
// binary. Each runner validates its configuration, does the computation and
// returns a Report; serialization lives with the caller.
//
// Errors propagate: DomainError for invalid parameters, NumericalError for
// quadrature or convergence failures.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliffwave/field_calculus.hpp"
#include "cliffwave/spacetime.hpp"

namespace cwexp {

using ParamValue = std::variant<bool, int, double, std::string, std::vector<double>>;

struct NormRow {
  double h = 0.0;
  double rms = 0.0;
  double max = 0.0;
  double rel_rms = 0.0;
  double scale = 0.0;
  std::size_t points = 0;
  std::size_t excluded = 0;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct Report {
  std::string experiment;
  std::vector<std::pair<std::string, ParamValue>> parameters;
  std::vector<NormRow> norms;
  std::optional<double> order;  // empty when not applicable or exact
  bool exact = false;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::pair<std::string, std::string>> labels;
  Table table;
  bool pass = false;
  double wall_time = 0.0;

  void param(std::string key, ParamValue v) { parameters.emplace_back(std::move(key), std::move(v)); }
  void metric(std::string key, double v) { metrics.emplace_back(std::move(key), v); }
  void label(std::string key, std::string v) { labels.emplace_back(std::move(key), std::move(v)); }
  [[nodiscard]] double metric(const std::string& key) const;
  [[nodiscard]] const std::string& label(const std::string& key) const;
};

// ------------------------------------------------------------------ verify

struct VerifyConfig {
  std::string family = "bessel";  // bessel | modified-bessel | spherical | axicon | plane-wave | sinh | t2
  std::string field = "weyl";     // weyl | scalar
  int n = 0;
  std::optional<double> omega, k, Omega;
  double v = 0.5;                // spherical envelope speed
  int l = 0, m = 0;              // spherical multipole
  double kbar = 4.0;             // axicon
  double eta = 0.7853981633974483;
  std::string reading = "time-limit";  // sinh: literal | scaled | time-limit
  std::string handedness = "plus";
  std::string preset = "a";
  std::string scheme = "order2";
  cliffwave::Point4 lo{0.1, 0.55, 0.35, 0.2};
  double width = 0.5;
  int base_cells = 8;
  int refine = 3;
  int threads = 1;
  double min_order = 1.9;
  double tol = 1e-6;
};

Report run_verify(const VerifyConfig& c);

// ---------------------------------------------------------- invariants

struct InvariantsConfig {
  int samples = 1000;
  std::uint64_t seed = 20240917;
  double tol = 1e-12;
};

Report run_invariants(const InvariantsConfig& c);

// ---------------------------------------------------------------- oracle

struct OracleConfig {
  int pairs = 1000;
  std::uint64_t seed = 20240917;
  double tol = 1e-12;
};

Report run_oracle(const OracleConfig& c);

// ---------------------------------------------------------------- energy

struct EnergyConfig {
  std::string family = "bessel";  // bessel | spherical | xpulse
  std::string region = "cylinder";  // cylinder | disk | map
  int n = 0;
  std::optional<double> omega, k, Omega;
  double v = 0.5;
  double eta = 0.7853981633974483, T = 0.5, omega0 = 10.0, sigma = 1.0;
  std::string handedness = "plus";
  std::string preset = "a";
  std::vector<double> radii{0.5, 1.0, 2.0, 5.0};
  double t = 0.0;
  double z0 = 0.0;
  int theta_points = 16;
  double rel_tol = 1e-8;
  int map_points = 21;     // per axis
  double map_extent = 2.0;  // half-width of the x-z map
  std::string expect;       // bounded | power | divergent, empty for none
};

Report run_energy(const EnergyConfig& c);

// ---------------------------------------------------------------- xpulse

struct XPulseConfig {
  double eta = 0.7853981633974483;
  double T = 0.5;
  double omega0 = 10.0;
  double sigma = 1.0;
  double t0 = 1.0;
  double dt = 0.3;
  int times = 10;
  std::vector<double> rho{0.0, 0.3, 0.8};
  double quad_tol = 1e-11;
  int quad_max_panels = 1 << 14;
  double speed_tol = 0.01;
  double boundary_tol = 1e-9;
};

Report run_xpulse(const XPulseConfig& c);

// ------------------------------------------------------------ fit-axicon

struct AxiconConfig {
  double v = 2.0;
};

Report run_fit_axicon(const AxiconConfig& c);

// ------------------------------------------------------------ dispersion

struct DispersionConfig {
  std::string branch = "subluminal";
  std::optional<double> Omega;
  std::vector<double> omegas;
  std::vector<double> ks;
};

Report run_dispersion(const DispersionConfig& c);

}  // namespace cwexp
