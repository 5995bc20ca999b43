#pragma once

// Dirac-Hestenes spinors as even multivectors, their Weyl (chiral) parts,
// parity, probability currents, polar form and spin-frame changes.
//
// Conventions: gamma5 = g0 g1 g2 g3, g21 = g2 g1, all indices refer to the
// generators of the coordinate coframe.

#include <cmath>
#include <numbers>
#include <utility>

#include "cliffwave/clifford.hpp"
#include "cliffwave/errors.hpp"
#include "cliffwave/spacetime.hpp"

namespace cliffwave {

enum class Handedness { plus, minus };

constexpr double sign_of(Handedness h) { return h == Handedness::plus ? 1.0 : -1.0; }
constexpr Handedness opposite(Handedness h) {
  return h == Handedness::plus ? Handedness::minus : Handedness::plus;
}
constexpr const char* to_string(Handedness h) { return h == Handedness::plus ? "+" : "-"; }

inline constexpr double kEvenTolerance = 1e-12;

template <typename T>
void require_even(const BasicMultivector<T>& psi, const char* what) {
  if (psi.odd_part().norm() > kEvenTolerance * std::max(1.0, psi.norm()))
    throw DomainError(std::string(what) + ": spinor must be an even multivector");
}

template <typename T>
struct BasicWeylValue {
  BasicMultivector<T> value;
  Handedness handedness = Handedness::plus;
};

using WeylValue = BasicWeylValue<double>;
using CWeylValue = BasicWeylValue<cplx>;

// L(psi) = gamma5 psi g21 is an involution on even elements; the chiral
// projectors are (1 -/+ L) / 2.
template <typename T>
BasicMultivector<T> chirality_map(const BasicMultivector<T>& psi) {
  static const BasicMultivector<T> g5(BasicMultivector<T>::pseudoscalar());
  static const BasicMultivector<T> g21(BasicMultivector<T>::product_of({2, 1}));
  return g5 * psi * g21;
}

// F(+/-) = (psi -/+ gamma5 psi g21) / 2.
template <typename T>
BasicWeylValue<T> weyl_project(const BasicMultivector<T>& psi, Handedness h) {
  require_even(psi, "weyl_project");
  return {(psi - T(sign_of(h)) * chirality_map(psi)) * T(0.5), h};
}

// || gamma5 F -/+ F g21 ||, zero for genuine Weyl values.
template <typename T>
double chirality_residual(const BasicWeylValue<T>& f) {
  static const BasicMultivector<T> g5(BasicMultivector<T>::pseudoscalar());
  static const BasicMultivector<T> g21(BasicMultivector<T>::product_of({2, 1}));
  return (g5 * f.value - T(sign_of(f.handedness)) * (f.value * g21)).norm();
}

// || reverse(F) F || + || F reverse(F) ||.
template <typename T>
double null_check(const BasicWeylValue<T>& f) {
  const auto rev = f.value.reverse();
  return (rev * f.value).norm() + (f.value * rev).norm();
}

// J = F g0 reverse(F).
template <typename T>
BasicMultivector<T> current(const BasicMultivector<T>& f) {
  return f * BasicMultivector<T>::gamma(0) * f.reverse();
}
template <typename T>
BasicMultivector<T> current(const BasicWeylValue<T>& f) {
  return current(f.value);
}

// (P psi)(t, x) = -g0 psi(t, -x) g0.
template <typename T>
FieldFn<T> parity(FieldFn<T> psi) {
  return [psi = std::move(psi)](const Point4& p) {
    static const BasicMultivector<T> g0(BasicMultivector<T>::gamma(0));
    return -(g0 * psi(mirror_space(p)) * g0);
  };
}

// Parity eigenstates built from the chiral parts psi(+/-):
//   up(t,x)   = g0 psi_-(t,-x) g0 - psi_-(t,x)     (eigenvalue +1)
//   down(t,x) = g0 psi_+(t,-x) g0 + psi_+(t,x)     (eigenvalue -1)
// The mirrored argument in the sandwich term makes the eigenrelation hold for
// fields of any x dependence; for x-independent fields it is the plain
// g0 psi g0 -/+ psi form.
template <typename T>
std::pair<FieldFn<T>, FieldFn<T>> parity_eigenstates(FieldFn<T> psi) {
  auto up = [psi](const Point4& p) {
    static const BasicMultivector<T> g0(BasicMultivector<T>::gamma(0));
    const auto here = weyl_project(psi(p), Handedness::minus).value;
    const auto there = weyl_project(psi(mirror_space(p)), Handedness::minus).value;
    return g0 * there * g0 - here;
  };
  auto down = [psi](const Point4& p) {
    static const BasicMultivector<T> g0(BasicMultivector<T>::gamma(0));
    const auto here = weyl_project(psi(p), Handedness::plus).value;
    const auto there = weyl_project(psi(mirror_space(p)), Handedness::plus).value;
    return g0 * there * g0 + here;
  };
  return {FieldFn<T>(up), FieldFn<T>(down)};
}

// Unit even element u with u reverse(u) = 1.
class Rotor {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  static Rotor make(const Multivector& u) {
    if (!u.is_even(kUnitTolerance)) throw DomainError("rotor must be an even multivector");
    if ((u * u.reverse() - Multivector(1.0)).norm() > kUnitTolerance)
      throw DomainError("rotor must satisfy u reverse(u) = 1");
    return Rotor(u);
  }
  static Rotor identity() { return Rotor(Multivector(1.0)); }
  // exp(B/2) for a simple bivector B with scalar square.
  static Rotor from_bivector(const Multivector& bivector) {
    return make(exp_simple(bivector * 0.5));
  }

  [[nodiscard]] const Multivector& value() const { return u_; }
  [[nodiscard]] Multivector inverse() const { return u_.reverse(); }
  [[nodiscard]] Rotor compose(const Rotor& then) const { return Rotor(u_ * then.u_); }
  // gamma -> u gamma u^-1.
  [[nodiscard]] Multivector transform(const Multivector& a) const { return u_ * a * u_.reverse(); }

 private:
  explicit Rotor(Multivector u) : u_(std::move(u)) {}
  Multivector u_;
};

struct PolarForm {
  double rho = 0.0;   // > 0
  double beta = 0.0;  // in (-pi, pi]
  Rotor rotor = Rotor::identity();

  [[nodiscard]] Multivector reconstruct() const {
    return std::sqrt(rho) * (exp_gamma5(beta / 2.0) * rotor.value());
  }
  // v = R g0 reverse(R), a unit timelike vector.
  [[nodiscard]] Multivector velocity() const { return rotor.transform(Multivector::gamma(0)); }
};

// psi = rho^(1/2) exp(beta gamma5 / 2) R for non-singular even psi.
PolarForm polar_decompose(const Multivector& psi);

// Representative in spin frame `to` of the spinor whose representative in
// frame `from` is psi: pairs are equivalent when psi_to to^-1 = psi_from from^-1,
// hence psi_to = psi_from from^-1 to.
Multivector change_frame(const Multivector& psi, const Rotor& from, const Rotor& to);
CMultivector change_frame(const CMultivector& psi, const Rotor& from, const Rotor& to);

}  // namespace cliffwave
