#pragma once

#include <array>
#include <functional>

#include "cliffwave/clifford.hpp"

namespace cliffwave {

// Spacetime point (t, x, y, z); index mu matches gamma_mu. Units with c = 1.
using Point4 = std::array<double, 4>;

template <typename T>
using FieldFn = std::function<BasicMultivector<T>(const Point4&)>;

using RealField = FieldFn<double>;
using ComplexField = FieldFn<cplx>;

// Value and first partials d_mu of a multivector field at a point.
struct FieldJet {
  CMultivector value;
  std::array<CMultivector, 4> d;
};

// Field with exact first partials (closed-form fields built from jets).
class AnalyticField {
 public:
  virtual ~AnalyticField() = default;
  [[nodiscard]] virtual FieldJet eval(const Point4& p) const = 0;
  [[nodiscard]] CMultivector operator()(const Point4& p) const { return eval(p).value; }
  // The returned function refers to *this, which must outlive it.
  [[nodiscard]] ComplexField as_function() const {
    return [this](const Point4& p) { return eval(p).value; };
  }
};

// Dirac operator from exact partials: sum_mu g_mu d_mu f.
inline CMultivector dirac_from_partials(const std::array<CMultivector, 4>& d) {
  CMultivector r;
  for (int mu = 0; mu < 4; ++mu) r += CMultivector::gamma(mu) * d[mu];
  return r;
}

inline Point4 mirror_space(const Point4& p) { return {p[0], -p[1], -p[2], -p[3]}; }

}  // namespace cliffwave
