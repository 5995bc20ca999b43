#pragma once

// Gated X-pulse: the Sommerfeld problem with aperture data at z = 0
//   Psi(t, rho, 0)    = T(t) int dw D(w) J0(w rho sin eta) e^{-i w t}
//   d_z Psi(t, rho, 0) = i cos(eta) T(t) int dw D(w) w J0(w rho sin eta) e^{-i w t}
// with the gate T(t) = Theta(t + T) - Theta(t - T), and its solution for z >= 0
//   Psi = int dw D(w) J0(w rho sin eta) e^{-i w (t - z cos eta)}   for |t - z cos eta| < T,
//   Psi = 0                                                         for |t - z cos eta| > T.
// Theta(0) = 1/2, so the gate is 1/2 on the sheet |tau| = T itself.

#include <functional>
#include <string>
#include <vector>

#include "cliffwave/clifford.hpp"
#include "cliffwave/quadrature.hpp"
#include "cliffwave/wave_solutions.hpp"

namespace cliffwave {

struct Spectrum {
  std::function<cplx(double)> D;
  double lo = 0.0;  // support [lo, hi], lo >= 0
  double hi = 0.0;
  std::string name;

  // exp(-(w - w0)^2 / (2 sigma^2)) truncated to w0 +/- cut sigma; needs w0 > cut sigma.
  static Spectrum gaussian(double omega0, double sigma, double cut = 6.0);
};

struct XPulseParams {
  double eta = 0.0;  // axicon angle in (0, pi/2)
  double T = 1.0;    // gate half-width
  Spectrum spectrum;
  QuadratureOptions quadrature{};

  void validate() const;
  [[nodiscard]] double front_speed() const;  // 1 / cos eta
};

// Theta(t + T) - Theta(t - T) with Theta(0) = 1/2.
double gate(double t, double T);

cplx boundary_profile(const XPulseParams& p, double t, double rho);
cplx boundary_normal_derivative(const XPulseParams& p, double t, double rho);

// Requires z >= 0.
cplx eval_xpulse(const XPulseParams& p, double t, double rho, double z);

// Wave-equation view with exact partials (differentiated under the integral;
// the gate is locally constant away from the sheet |tau| = T).
class XPulse final : public ScalarSolution {
 public:
  explicit XPulse(XPulseParams p);
  [[nodiscard]] cplx value(const Point4& p) const override;
  [[nodiscard]] ScalarJet jet(const Point4& p) const override;
  [[nodiscard]] std::string name() const override { return "xpulse"; }
  [[nodiscard]] const XPulseParams& params() const { return p_; }
  // Distance in tau from the sheet, |(|tau| - T)|.
  [[nodiscard]] double sheet_distance(const Point4& p) const;

 private:
  XPulseParams p_;
};

struct FrontFit {
  double threshold = 0.0;  // absolute |Psi| level
  double peak = 0.0;       // on-axis maximum of |Psi|
  std::vector<double> times;
  std::vector<double> positions;  // z_f(t)
  double speed = 0.0;
  double intercept = 0.0;
  double speed_stderr = 0.0;
  double fit_rms = 0.0;
};

struct FrontOptions {
  double rel_threshold = 1e-3;  // epsilon relative to the on-axis peak
  int scan_points = 400;
  double bisect_tol = 1e-10;
};

// Largest z in [z_lo, z_hi] with |Psi(t, 0, z)| above threshold, per time,
// and a least-squares line through (t, z_f). Needs >= 8 times.
FrontFit track_front(const XPulseParams& p, const std::vector<double>& times, double z_lo, double z_hi,
                     const FrontOptions& opt = {});

// On-axis maximum of |Psi| over the sheet.
double on_axis_peak(const XPulseParams& p, int samples = 401);

}  // namespace cliffwave
