#include "cliffwave/xpulse.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cliffwave/errors.hpp"
#include "cliffwave/special_functions.hpp"

namespace cliffwave {

namespace {

constexpr cplx kI{0.0, 1.0};
using JetArray = std::array<cplx, 21>;

JetArray to_array(const Jet& j) {
  JetArray a{};
  a[0] = j.value;
  for (int m = 0; m < 4; ++m) {
    a[1 + m] = j.grad[m];
    for (int n = 0; n < 4; ++n) a[5 + 4 * m + n] = j.hess[m][n];
  }
  return a;
}

Jet from_array(const JetArray& a) {
  Jet j;
  j.value = a[0];
  for (int m = 0; m < 4; ++m) {
    j.grad[m] = a[1 + m];
    for (int n = 0; n < 4; ++n) j.hess[m][n] = a[5 + 4 * m + n];
  }
  return j;
}

// int D(w) J0(w rho sin eta) w^power e^{-i w tau} dw
cplx spectral_integral(const XPulseParams& p, double tau, double rho, int power) {
  const double s = std::sin(p.eta);
  auto f = [&](double w) {
    return p.spectrum.D(w) * bessel_j(0, w * rho * s) * std::pow(w, power) * std::exp(-kI * w * tau);
  };
  return integrate<cplx>(f, p.spectrum.lo, p.spectrum.hi, p.quadrature).value;
}

}  // namespace

Spectrum Spectrum::gaussian(double omega0, double sigma, double cut) {
  if (!(sigma > 0) || !(cut > 0)) throw DomainError("Gaussian spectrum needs sigma > 0 and cut > 0");
  if (!(omega0 > cut * sigma))
    throw DomainError("Gaussian spectrum needs omega0 > cut * sigma so that only positive frequencies enter");
  Spectrum s;
  s.D = [omega0, sigma](double w) {
    const double u = (w - omega0) / sigma;
    return cplx(std::exp(-0.5 * u * u));
  };
  s.lo = omega0 - cut * sigma;
  s.hi = omega0 + cut * sigma;
  std::ostringstream os;
  os << "gaussian(omega0=" << omega0 << ",sigma=" << sigma << ",cut=" << cut << ")";
  s.name = os.str();
  return s;
}

void XPulseParams::validate() const {
  if (!(eta > 0.0 && eta < std::numbers::pi / 2)) throw DomainError("X-pulse: eta must lie in (0, pi/2)");
  if (!(T > 0) || !std::isfinite(T)) throw DomainError("X-pulse: gate half-width T must be > 0");
  if (!spectrum.D) throw DomainError("X-pulse: spectrum missing");
  if (!(spectrum.lo >= 0) || !(spectrum.hi > spectrum.lo))
    throw DomainError("X-pulse: spectrum support must be [lo, hi] with 0 <= lo < hi");
}

double XPulseParams::front_speed() const { return 1.0 / std::cos(eta); }

double gate(double t, double T) {
  const double a = std::abs(t);
  if (a < T) return 1.0;
  if (a > T) return 0.0;
  return 0.5;
}

cplx boundary_profile(const XPulseParams& p, double t, double rho) {
  p.validate();
  const double g = gate(t, p.T);
  if (g == 0.0) return 0.0;
  return g * spectral_integral(p, t, rho, 0);
}

cplx boundary_normal_derivative(const XPulseParams& p, double t, double rho) {
  p.validate();
  const double g = gate(t, p.T);
  if (g == 0.0) return 0.0;
  return kI * std::cos(p.eta) * g * spectral_integral(p, t, rho, 1);
}

cplx eval_xpulse(const XPulseParams& p, double t, double rho, double z) {
  if (!(z >= 0)) throw DomainError("X-pulse solution is defined for z >= 0");
  p.validate();
  const double tau = t - z * std::cos(p.eta);
  const double g = gate(tau, p.T);
  if (g == 0.0) return 0.0;
  return g * spectral_integral(p, tau, rho, 0);
}

XPulse::XPulse(XPulseParams p) : p_(std::move(p)) { p_.validate(); }

cplx XPulse::value(const Point4& q) const { return eval_xpulse(p_, q[0], std::hypot(q[1], q[2]), q[3]); }

double XPulse::sheet_distance(const Point4& q) const {
  const double tau = q[0] - q[3] * std::cos(p_.eta);
  return std::abs(std::abs(tau) - p_.T);
}

ScalarJet XPulse::jet(const Point4& q) const {
  if (!(q[3] >= 0)) throw DomainError("X-pulse solution is defined for z >= 0");
  const double ce = std::cos(p_.eta), se = std::sin(p_.eta);
  const double g = gate(q[0] - q[3] * ce, p_.T);
  if (g == 0.0) return Jet{};
  auto f = [&](double w) {
    // e^{a.x} with a = i w (-1, 0, 0, cos eta): grad = a e, hess = a a^T e.
    const std::array<cplx, 4> a{-kI * w, 0.0, 0.0, kI * w * ce};
    Jet e;
    e.value = std::exp(-kI * w * (q[0] - q[3] * ce));
    for (int m = 0; m < 4; ++m) {
      e.grad[m] = a[m] * e.value;
      for (int n = 0; n < 4; ++n) e.hess[m][n] = a[m] * a[n] * e.value;
    }
    return to_array(cylinder_mode_jet(false, 0, w * se, q[1], q[2]) * e * p_.spectrum.D(w));
  };
  return from_array(integrate<JetArray>(f, p_.spectrum.lo, p_.spectrum.hi, p_.quadrature).value) * g;
}

double on_axis_peak(const XPulseParams& p, int samples) {
  p.validate();
  if (samples < 2) throw DomainError("on_axis_peak needs at least 2 samples");
  double peak = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double tau = -p.T + 2.0 * p.T * i / (samples - 1);
    peak = std::max(peak, std::abs(spectral_integral(p, tau, 0.0, 0)));
  }
  return peak;
}

FrontFit track_front(const XPulseParams& p, const std::vector<double>& times, double z_lo, double z_hi,
                     const FrontOptions& opt) {
  p.validate();
  if (times.size() < 8) throw DomainError("front fit needs at least 8 time samples");
  if (!(z_lo >= 0 && z_hi > z_lo)) throw DomainError("front window needs 0 <= z_lo < z_hi");
  if (opt.scan_points < 2) throw DomainError("front scan needs at least 2 points");

  FrontFit fit;
  fit.peak = on_axis_peak(p);
  fit.threshold = opt.rel_threshold * fit.peak;
  auto above = [&](double t, double z) { return std::abs(eval_xpulse(p, t, 0.0, z)) > fit.threshold; };

  const double dz = (z_hi - z_lo) / opt.scan_points;
  for (double t : times) {
    if (above(t, z_hi)) {
      std::ostringstream os;
      os << "front at t=" << t << " lies beyond the window end z=" << z_hi;
      throw NumericalError(os.str());
    }
    double hi = z_hi, lo = z_hi;
    bool found = false;
    for (int i = opt.scan_points - 1; i >= 0; --i) {
      lo = z_lo + i * dz;
      if (above(t, lo)) {
        found = true;
        break;
      }
      hi = lo;
    }
    if (!found) {
      std::ostringstream os;
      os << "no front crossing at t=" << t << " in z window [" << z_lo << ", " << z_hi << "]";
      throw NumericalError(os.str());
    }
    while (hi - lo > opt.bisect_tol) {
      const double mid = 0.5 * (lo + hi);
      (above(t, mid) ? lo : hi) = mid;
    }
    fit.times.push_back(t);
    fit.positions.push_back(0.5 * (lo + hi));
  }

  const double n = static_cast<double>(fit.times.size());
  double st = 0, sz = 0;
  for (std::size_t i = 0; i < fit.times.size(); ++i) {
    st += fit.times[i];
    sz += fit.positions[i];
  }
  const double tm = st / n, zm = sz / n;
  double stt = 0, stz = 0;
  for (std::size_t i = 0; i < fit.times.size(); ++i) {
    stt += (fit.times[i] - tm) * (fit.times[i] - tm);
    stz += (fit.times[i] - tm) * (fit.positions[i] - zm);
  }
  if (stt == 0) throw DomainError("front fit needs distinct times");
  fit.speed = stz / stt;
  fit.intercept = zm - fit.speed * tm;
  double ss = 0;
  for (std::size_t i = 0; i < fit.times.size(); ++i) {
    const double r = fit.positions[i] - (fit.intercept + fit.speed * fit.times[i]);
    ss += r * r;
  }
  fit.fit_rms = std::sqrt(ss / n);
  fit.speed_stderr = std::sqrt(ss / (n - 2) / stt);
  return fit;
}

}  // namespace cliffwave
