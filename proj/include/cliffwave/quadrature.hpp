#pragma once

// Composite Gauss-Legendre quadrature with panel doubling. The estimate is
// accepted when two successive panel counts agree to within
//   max(abs_tol, rel_tol * |I|).
// Integrands may return double, complex, or fixed/dynamic arrays of either;
// the error of an array is the largest component difference.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "cliffwave/errors.hpp"

namespace cliffwave {

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 0.0;
  int initial_panels = 4;
  int max_panels = 1 << 14;
};

template <typename V>
struct QuadratureResult {
  V value{};
  double error_estimate = 0.0;
  int panels = 0;
  int evaluations = 0;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule (Newton iteration on P_n), cached per n.
const GaussRule& gauss_legendre(int n);

// Points per panel of the composite rule.
inline constexpr int kPanelOrder = 10;

namespace quad_detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }
template <typename T, std::size_t N>
double magnitude(const std::array<T, N>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, magnitude(x));
  return m;
}
template <typename T>
double magnitude(const std::vector<T>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, magnitude(x));
  return m;
}

inline void add_scaled(double& acc, double v, double w) { acc += w * v; }
inline void add_scaled(std::complex<double>& acc, std::complex<double> v, double w) { acc += w * v; }
template <typename T, std::size_t N>
void add_scaled(std::array<T, N>& acc, const std::array<T, N>& v, double w) {
  for (std::size_t i = 0; i < N; ++i) add_scaled(acc[i], v[i], w);
}
template <typename T>
void add_scaled(std::vector<T>& acc, const std::vector<T>& v, double w) {
  if (acc.empty()) acc.assign(v.size(), T{});
  for (std::size_t i = 0; i < v.size(); ++i) add_scaled(acc[i], v[i], w);
}

template <typename V>
V difference(V a, const V& b) {
  add_scaled(a, b, -1.0);
  return a;
}

}  // namespace quad_detail

// Fixed composite rule with `panels` equal panels on [a, b].
template <typename V, typename F>
V integrate_fixed(F&& f, double a, double b, int panels, int* evaluations = nullptr) {
  const GaussRule& rule = gauss_legendre(kPanelOrder);
  const double width = (b - a) / panels;
  V acc{};
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      quad_detail::add_scaled(acc, f(mid + 0.5 * width * rule.nodes[i]), 0.5 * width * rule.weights[i]);
  }
  if (evaluations) *evaluations += panels * static_cast<int>(rule.nodes.size());
  return acc;
}

template <typename V, typename F>
QuadratureResult<V> integrate(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
  QuadratureResult<V> r;
  if (a == b) return r;
  int panels = std::max(1, opt.initial_panels);
  V prev = integrate_fixed<V>(f, a, b, panels, &r.evaluations);
  while (true) {
    panels *= 2;
    V next = integrate_fixed<V>(f, a, b, panels, &r.evaluations);
    const double err = quad_detail::magnitude(quad_detail::difference(next, prev));
    const double target = std::max(opt.abs_tol, opt.rel_tol * quad_detail::magnitude(next));
    r.value = next;
    r.error_estimate = err;
    r.panels = panels;
    if (err <= target) return r;
    if (panels >= opt.max_panels) {
      std::ostringstream os;
      os << "quadrature did not converge on [" << a << ", " << b << "]: achieved " << err << " with " << panels
         << " panels, target " << target;
      throw NumericalError(os.str());
    }
    prev = std::move(next);
  }
}

}  // namespace cliffwave
