#pragma once

// Weyl fields from generalized potentials A + gamma5 B.
//
// For the separable potential Upsilon (m + gamma5 n) with constant 1-forms
// m, n the Dirac derivative is F = (d Upsilon)(m + gamma5 n), where
// d Upsilon = g_mu d_mu Upsilon. F is a Weyl value of handedness +/- when
//   m_0 = m_3 = n_0 = n_3 = 0,   m_1 = +/- n_2,   m_2 = -/+ n_1,   m . n = 0,
// and F solves the Weyl equation whenever Upsilon solves the wave equation.

#include <array>
#include <string>
#include <utility>

#include "cliffwave/clifford.hpp"
#include "cliffwave/spacetime.hpp"
#include "cliffwave/spinor.hpp"
#include "cliffwave/wave_solutions.hpp"

namespace cliffwave {

// How the contraction "V . Gamma" of a 1-form V with a bivector Gamma is read
// in the handedness split:
//   left   <V Gamma>_1   (V _| Gamma)
//   right  <Gamma V>_1   (Gamma |_ V) = -(V _| Gamma)
// Only `right` makes P(+/-)(d A) = d A'(+/-) hold for arbitrary potentials;
// see split_consistency_residual.
enum class ContractionReading { left, right };
const char* to_string(ContractionReading r);

template <typename T>
BasicMultivector<T> contract_with(const BasicMultivector<T>& v, const BasicMultivector<T>& bivector,
                                  ContractionReading r) {
  return r == ContractionReading::left ? left_contract(v, bivector) : right_contract(bivector, v);
}

template <typename T>
struct BasicHandednessSplit {
  BasicMultivector<T> A;  // A'
  BasicMultivector<T> B;  // B'
};
using HandednessSplit = BasicHandednessSplit<double>;

template <typename T>
void require_one_form(const BasicMultivector<T>& v, const char* what) {
  if ((v - v.grade(1)).norm() > 1e-12 * std::max(1.0, v.norm()))
    throw DomainError(std::string(what) + " must be a 1-form");
}

//   2 A'(+/-) = A +/- A.g03 +/- B.g21
//   2 B'(+/-) = B -/+ A.g21 +/- B.g03
template <typename T>
BasicHandednessSplit<T> split_potential(const BasicMultivector<T>& A, const BasicMultivector<T>& B, Handedness h,
                                        ContractionReading r = ContractionReading::right) {
  require_one_form(A, "split_potential: A");
  require_one_form(B, "split_potential: B");
  static const BasicMultivector<T> g03(BasicMultivector<T>::product_of({0, 3}));
  static const BasicMultivector<T> g21(BasicMultivector<T>::product_of({2, 1}));
  const T s(sign_of(h));
  const T half(0.5);
  BasicHandednessSplit<T> out;
  out.A = (A + s * contract_with(A, g03, r) + s * contract_with(B, g21, r)) * half;
  out.B = (B - s * contract_with(A, g21, r) + s * contract_with(B, g03, r)) * half;
  return out;
}

// || P(+/-)(d(A + g5 B)) - d(A' + g5 B') || at a point, given the partials
// d_mu A and d_mu B of a 1-form potential there. Pure algebra: the split is
// linear with constant coefficients, so it commutes with d_mu.
template <typename T>
double split_consistency_residual(const std::array<BasicMultivector<T>, 4>& dA,
                                  const std::array<BasicMultivector<T>, 4>& dB, Handedness h,
                                  ContractionReading r = ContractionReading::right) {
  static const BasicMultivector<T> g5(BasicMultivector<T>::pseudoscalar());
  BasicMultivector<T> full, split;
  for (int mu = 0; mu < 4; ++mu) {
    const auto g = BasicMultivector<T>::gamma(mu);
    full += g * (dA[mu] + g5 * dB[mu]);
    const auto s = split_potential(dA[mu], dB[mu], h, r);
    split += g * (s.A + g5 * s.B);
  }
  return (weyl_project(full, h).value - split).norm();
}

// Upsilon (m + gamma5 n) with m . n = 0 checked at construction.
class GeneralizedPotential {
 public:
  GeneralizedPotential(ScalarSolutionPtr upsilon, const Multivector& m, const Multivector& n);

  [[nodiscard]] const ScalarSolution& upsilon() const { return *upsilon_; }
  [[nodiscard]] const ScalarSolutionPtr& upsilon_ptr() const { return upsilon_; }
  [[nodiscard]] const Multivector& m() const { return m_; }
  [[nodiscard]] const Multivector& n() const { return n_; }
  // m + gamma5 n.
  [[nodiscard]] Multivector factor() const { return m_ + Multivector::pseudoscalar() * n_; }

  // A = Upsilon m and B = Upsilon n at a point.
  [[nodiscard]] std::pair<CMultivector, CMultivector> components(const Point4& p) const;

 private:
  ScalarSolutionPtr upsilon_;
  Multivector m_;
  Multivector n_;
};

// Named (m, n) pairs satisfying the Weyl component constraints.
enum class WeylPreset {
  a,  // m = g1, n = +/- g2
  b,  // m = g2, n = -/+ g1
};
std::pair<Multivector, Multivector> weyl_preset(WeylPreset preset, Handedness h);

// Throws DomainError naming the first violated constraint.
void validate_weyl_constraints(const Multivector& m, const Multivector& n, Handedness h);

// d(Upsilon (m + gamma5 n)) with exact first partials.
class PotentialField : public AnalyticField {
 public:
  explicit PotentialField(GeneralizedPotential potential);
  [[nodiscard]] FieldJet eval(const Point4& p) const override;
  [[nodiscard]] const GeneralizedPotential& potential() const { return potential_; }

 protected:
  GeneralizedPotential potential_;
  CMultivector factor_;
};

// F(+/-) = d Upsilon (m + gamma5 n) for (m, n) obeying the constraints.
class WeylField final : public PotentialField {
 public:
  WeylField(GeneralizedPotential potential, Handedness h);
  [[nodiscard]] Handedness handedness() const { return handedness_; }
  [[nodiscard]] CWeylValue weyl_value(const Point4& p) const { return {eval(p).value, handedness_}; }

 private:
  Handedness handedness_;
};

WeylField weyl_from_potential(const GeneralizedPotential& p, Handedness h);

// psi = d(A + gamma5 B) with no handedness constraint.
PotentialField dirac_potential(const GeneralizedPotential& p);

}  // namespace cliffwave
