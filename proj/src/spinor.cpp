#include "cliffwave/spinor.hpp"

namespace cliffwave {

namespace {
constexpr double kSingularThreshold = 1e-10;
}

PolarForm polar_decompose(const Multivector& psi) {
  require_even(psi, "polar_decompose");
  const Multivector pp = psi * psi.reverse();
  const double norm2 = psi.norm() * psi.norm();
  // psi reverse(psi) of an even element lies in the scalar + pseudoscalar plane.
  const double s = pp.scalar();
  const double p = pp.coeff(kPseudoscalarMask);
  const double modulus = std::hypot(s, p);
  if (norm2 == 0.0 || modulus < kSingularThreshold * norm2)
    throw SingularSpinorError("polar_decompose: psi reverse(psi) = 0 (singular spinor, e.g. a Weyl value)");

  PolarForm out;
  out.rho = modulus;
  out.beta = std::atan2(p, s);
  if (out.beta <= -std::numbers::pi) out.beta = std::numbers::pi;
  const Multivector r = exp_gamma5(-out.beta / 2.0) * psi / std::sqrt(modulus);
  out.rotor = Rotor::make(r);
  return out;
}

Multivector change_frame(const Multivector& psi, const Rotor& from, const Rotor& to) {
  require_even(psi, "change_frame");
  return psi * from.inverse() * to.value();
}

CMultivector change_frame(const CMultivector& psi, const Rotor& from, const Rotor& to) {
  require_even(psi, "change_frame");
  return psi * CMultivector(from.inverse()) * CMultivector(to.value());
}

}  // namespace cliffwave
