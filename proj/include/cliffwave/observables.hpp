#pragma once

// Energy-momentum of Weyl fields:
//   T+(g_mu) = < d_mu F  g2 g1 g0  reverse(F) >_1,   T00 = < T+(g_0) g_0 >_0,
//   E(R) = integral of T00 over a spatial region.
//
// Complexified fields are mapped to real multivector fields by the spinor
// dictionary i -> right multiplication by g21:  F = A + iB  ->  A + B g21.
// This preserves both the Weyl equation and the chirality condition, and a
// single-frequency beam maps to a rotor phase e^{g21 phi}, so its density
// does not oscillate in sign.

#include <array>
#include <string>
#include <vector>

#include "cliffwave/clifford.hpp"
#include "cliffwave/field_calculus.hpp"
#include "cliffwave/spacetime.hpp"

namespace cliffwave {

// A + iB -> A + B g21.
Multivector to_real_spinor(const CMultivector& f);

struct StressEnergy {
  std::array<Multivector, 4> T;  // T+(g_mu), grade 1
  double T00 = 0.0;
  double leakage = 0.0;  // largest non-grade-1 norm before projection

  // T_mu nu = < T+(g_mu) g_nu >_0.
  [[nodiscard]] double component(int mu, int nu) const;
  // max over mu, nu of |T_mu nu - T_nu mu|.
  [[nodiscard]] double asymmetry() const;
};

StressEnergy stress_energy(const FieldJet& f);
StressEnergy stress_energy(const AnalyticField& F, const Point4& p);
// Same with central-difference partials.
StressEnergy stress_energy_fd(const ComplexField& F, const Point4& p, const std::array<double, 4>& h,
                              FdScheme scheme = FdScheme::order2);

enum class GrowthClass { bounded, power, divergent };
const char* to_string(GrowthClass g);

struct EnergyOptions {
  int theta_points = 16;         // trapezoid in the azimuth
  double panels_per_unit = 2.0;  // initial Gauss-Legendre panels per unit length
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
};

struct EnergyReport {
  std::string region;  // "cylinder" or "disk"
  std::string rule;
  std::vector<double> radii;
  std::vector<double> energies;
  double exponent = 0.0;  // log-log slope over the final decade of R
  GrowthClass growth = GrowthClass::bounded;
};

// Integral of T00 at time t over rho < R, |z - z0| < R.
double energy_integral(const AnalyticField& F, double t, double R, double z0 = 0.0, const EnergyOptions& opt = {});

// Integral of T00 at (t, z0) over the disk rho < R, per unit length in z.
double transverse_energy(const AnalyticField& F, double t, double z0, double R, const EnergyOptions& opt = {});

// Growth class of E(R): divergent when the final-decade exponent exceeds
// 0.5, bounded when E changes by less than 1e-3 (relative) over the last
// factor of two in R, power otherwise. Radii must span at least a decade.
EnergyReport classify_growth(std::string region, std::string rule, std::vector<double> radii,
                             std::vector<double> energies);

EnergyReport energy_sweep(const AnalyticField& F, double t, const std::vector<double>& radii,
                          const EnergyOptions& opt = {});
EnergyReport transverse_energy_sweep(const AnalyticField& F, double t, double z0, const std::vector<double>& radii,
                                     const EnergyOptions& opt = {});

}  // namespace cliffwave
