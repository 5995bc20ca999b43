#pragma once

// Chiral (duality) transformations and the chirally coupled Weyl equations
//   d F+ + g gamma5 B F+ = 0,      d F- - g gamma5 B F- = 0,
// which are invariant under
//   F(+/-) -> F(+/-) e^{g gamma5 theta},   B -> B +/- d theta.
// A common B therefore couples F+ e^{g gamma5 theta} and F- e^{-g gamma5 theta}
// with B = d theta: the two chiralities carry opposite charges.
//
// For F = F+ + F- (e.g. a parity eigenstate) the pointwise identity
//   d(F g21) + g B F = gamma5 (R- - R+),   R(+/-) = d F(+/-) +/- g gamma5 B F(+/-),
// ties the single-equation form to the split pair; it holds for any linear
// derivative, in particular finite differences.

#include <array>
#include <functional>
#include <string>

#include "cliffwave/clifford.hpp"
#include "cliffwave/field_calculus.hpp"
#include "cliffwave/spacetime.hpp"
#include "cliffwave/spinor.hpp"

namespace cliffwave {

using VectorField = std::function<Multivector(const Point4&)>;

// Real scalar gauge function with exact gradient.
struct GaugeFunction {
  std::function<double(const Point4&)> value;
  std::function<std::array<double, 4>(const Point4&)> gradient;

  static GaugeFunction constant(double c);
  // theta = sum_mu k_mu x^mu + c.
  static GaugeFunction linear(const std::array<double, 4>& k, double c = 0.0);
  // theta1 + theta2.
  static GaugeFunction sum(const GaugeFunction& a, const GaugeFunction& b);

  // d theta = sum_mu g_mu d_mu theta.
  [[nodiscard]] Multivector dirac(const Point4& p) const;
};

struct GaugeConfig {
  double g = 1.0;
  VectorField B;  // null means B = 0

  [[nodiscard]] Multivector B_at(const Point4& p) const;
};

// F -> exp(angle gamma5) F.
ComplexField duality_transform(ComplexField F, double angle);
ComplexField duality_transform(ComplexField F, const GaugeFunction& angle);

// || d F +/- g gamma5 B F || under refinement.
ResidualReport coupled_residual(const ComplexField& F, const GaugeConfig& cfg, Handedness h,
                                const RefinementSpec& spec);

struct GaugedField {
  ComplexField F;
  GaugeConfig cfg;
};

// (F e^{g gamma5 theta}, B +/- d theta).
GaugedField gauge_transform(ComplexField F, const GaugeConfig& cfg, const GaugeFunction& theta, Handedness h);

struct ParitySplitReport {
  ResidualReport plus;      // R+ on F+ = P+(F)
  ResidualReport minus;     // R- on F- = P-(F)
  ResidualReport combined;  // d(F g21) + g B F
  // max over window points of || combined - gamma5 (R- - R+) ||, finest level
  double identity_max = 0.0;
  double identity_scale = 0.0;  // RMS of || combined || at the same points
};

// F is typically the +1 parity eigenstate of some psi (see
// parity_eigenstates). Residuals use the finite-difference derivative.
ParitySplitReport parity_split_check(const ComplexField& F, const GaugeConfig& cfg, const RefinementSpec& spec);

// max || d(F g21) -/+ d(gamma5 F) || on the finest level, for a Weyl field F
// of the given handedness, with FD derivatives.
double chirality_rewrite_check(const ComplexField& F, Handedness h, const RefinementSpec& spec);

}  // namespace cliffwave
