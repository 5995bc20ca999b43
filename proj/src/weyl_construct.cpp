#include "cliffwave/weyl_construct.hpp"

#include <cmath>
#include <sstream>

namespace cliffwave {

namespace {

constexpr double kConstraintTol = 1e-12;

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Coefficient of the generator g_mu.
double comp(const Multivector& v, int mu) { return v.coeff(1 << mu); }

}  // namespace

const char* to_string(ContractionReading r) { return r == ContractionReading::left ? "left" : "right"; }

GeneralizedPotential::GeneralizedPotential(ScalarSolutionPtr upsilon, const Multivector& m, const Multivector& n)
    : upsilon_(std::move(upsilon)), m_(m), n_(n) {
  if (!upsilon_) throw DomainError("generalized potential: missing scalar profile");
  require_one_form(m, "generalized potential: m");
  require_one_form(n, "generalized potential: n");
  m_ = m.grade(1);
  n_ = n.grade(1);
  const double mn = scalar_product(m_, n_);
  if (std::abs(mn) > kConstraintTol * std::max(1.0, m_.norm() * n_.norm()))
    throw DomainError("generalized potential: m . n = 0 violated (m . n = " + num(mn) + ")");
}

std::pair<CMultivector, CMultivector> GeneralizedPotential::components(const Point4& p) const {
  const cplx u = upsilon_->value(p);
  return {CMultivector(m_) * u, CMultivector(n_) * u};
}

std::pair<Multivector, Multivector> weyl_preset(WeylPreset preset, Handedness h) {
  const double s = sign_of(h);
  if (preset == WeylPreset::a) return {Multivector::gamma(1), Multivector::gamma(2) * s};
  return {Multivector::gamma(2), Multivector::gamma(1) * -s};
}

void validate_weyl_constraints(const Multivector& m, const Multivector& n, Handedness h) {
  const double s = sign_of(h);
  const std::string hs = std::string("Weyl(") + to_string(h) + ") constraint ";
  auto zero = [&](const Multivector& v, const char* name, int mu) {
    if (std::abs(comp(v, mu)) > kConstraintTol)
      throw DomainError(hs + name + "_" + std::to_string(mu) + " = 0 violated (got " + num(comp(v, mu)) + ")");
  };
  zero(m, "m", 0);
  zero(m, "m", 3);
  zero(n, "n", 0);
  zero(n, "n", 3);
  if (std::abs(comp(m, 1) - s * comp(n, 2)) > kConstraintTol)
    throw DomainError(hs + "m_1 = " + (s > 0 ? "+" : "-") + "n_2 violated (m_1 = " + num(comp(m, 1)) +
                      ", n_2 = " + num(comp(n, 2)) + ")");
  if (std::abs(comp(m, 2) + s * comp(n, 1)) > kConstraintTol)
    throw DomainError(hs + "m_2 = " + (s > 0 ? "-" : "+") + "n_1 violated (m_2 = " + num(comp(m, 2)) +
                      ", n_1 = " + num(comp(n, 1)) + ")");
}

PotentialField::PotentialField(GeneralizedPotential potential)
    : potential_(std::move(potential)), factor_(potential_.factor()) {}

FieldJet PotentialField::eval(const Point4& p) const {
  const Jet j = potential_.upsilon().jet(p);
  FieldJet out;
  CMultivector grad;
  for (int nu = 0; nu < 4; ++nu) grad.coeff(1 << nu) = j.grad[nu];
  out.value = grad * factor_;
  for (int mu = 0; mu < 4; ++mu) {
    CMultivector h;
    for (int nu = 0; nu < 4; ++nu) h.coeff(1 << nu) = j.hess[mu][nu];
    out.d[mu] = h * factor_;
  }
  return out;
}

WeylField::WeylField(GeneralizedPotential potential, Handedness h)
    : PotentialField(std::move(potential)), handedness_(h) {
  validate_weyl_constraints(potential_.m(), potential_.n(), h);
}

WeylField weyl_from_potential(const GeneralizedPotential& p, Handedness h) { return WeylField(p, h); }

PotentialField dirac_potential(const GeneralizedPotential& p) { return PotentialField(p); }

}  // namespace cliffwave
