#include "cliffwave/wave_solutions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cliffwave/errors.hpp"
#include "cliffwave/special_functions.hpp"

namespace cliffwave {

namespace {

constexpr cplx kI{0.0, 1.0};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

double sign_of(Branch b) { return b == Branch::subluminal ? 1.0 : -1.0; }

// Relative agreement of omega^2 - k^2 with +/- Omega^2.
void check_dispersion(const Dispersion& d, const char* who) {
  const double lhs = d.omega * d.omega - d.k * d.k;
  const double rhs = sign_of(d.branch) * d.Omega * d.Omega;
  const double scale = std::max({1.0, d.omega * d.omega, d.k * d.k});
  if (std::abs(lhs - rhs) > 1e-10 * scale) {
    throw DomainError(std::string(who) + ": " + to_string(d.branch) + " dispersion omega^2 - k^2 = " +
                      (d.branch == Branch::subluminal ? "+" : "-") + "Omega^2 violated (omega=" + fmt(d.omega) +
                      ", k=" + fmt(d.k) + ", Omega=" + fmt(d.Omega) + ")");
  }
}

Jet coordinate(int mu, const Point4& p) { return Jet::variable(mu, p[mu]); }

// exp(i (a . x)) for a constant covector a.
Jet linear_phase(const std::array<double, 4>& a, const Point4& p) {
  Jet arg;
  for (int mu = 0; mu < 4; ++mu) {
    arg.value += kI * a[mu] * p[mu];
    arg.grad[mu] = kI * a[mu];
  }
  return exp(arg);
}

// E_l(u) = j_l(sqrt u) / sqrt(u)^l composed with a jet u; E_l' = -E_{l+1}/2.
Jet entire_spherical(int l, const Jet& u) {
  const double u0 = u.value.real();
  return u.compose(spherical_j_entire(l, u0), -0.5 * spherical_j_entire(l + 1, u0),
                   0.25 * spherical_j_entire(l + 2, u0));
}

}  // namespace

const char* to_string(Branch b) { return b == Branch::subluminal ? "subluminal" : "superluminal"; }

Dispersion dispersion_solve(Branch branch, const DispersionInput& given) {
  const int count = int(given.omega.has_value()) + int(given.k.has_value()) + int(given.Omega.has_value());
  if (count != 2) throw DomainError("dispersion: give exactly two of omega, k, Omega");
  for (const auto& o : {given.omega, given.k, given.Omega})
    if (o) require_finite(*o, "dispersion parameter");
  if (given.Omega && *given.Omega < 0) throw DomainError("dispersion: Omega must be >= 0");
  if (given.omega && *given.omega < 0) throw DomainError("dispersion: omega must be >= 0");

  const double s = sign_of(branch);
  const std::string rel =
      std::string(to_string(branch)) + " dispersion omega^2 - k^2 = " + (s > 0 ? "" : "-") + "Omega^2";
  Dispersion d;
  d.branch = branch;
  if (given.omega && given.Omega) {
    d.omega = *given.omega;
    d.Omega = *given.Omega;
    const double k2 = d.omega * d.omega - s * d.Omega * d.Omega;
    if (k2 < 0)
      throw DomainError(rel + " requires omega >= Omega (got omega=" + fmt(d.omega) + ", Omega=" + fmt(d.Omega) +
                        ")");
    d.k = std::sqrt(k2);
  } else if (given.k && given.Omega) {
    d.k = *given.k;
    d.Omega = *given.Omega;
    const double w2 = d.k * d.k + s * d.Omega * d.Omega;
    if (w2 < 0)
      throw DomainError(rel + " requires |k| >= Omega (got k=" + fmt(d.k) + ", Omega=" + fmt(d.Omega) + ")");
    d.omega = std::sqrt(w2);
  } else {
    d.omega = *given.omega;
    d.k = *given.k;
    const double O2 = s * (d.omega * d.omega - d.k * d.k);
    if (O2 < 0)
      throw DomainError(rel + (s > 0 ? " requires omega >= |k|" : " requires |k| >= omega") + " (got omega=" +
                        fmt(d.omega) + ", k=" + fmt(d.k) + ")");
    d.Omega = std::sqrt(O2);
  }
  return d;
}

double axicon_fit(double v) {
  if (!(v > 1.0) || !std::isfinite(v))
    throw DomainError("axicon fit needs a finite speed v > 1 (got " + fmt(v) + ")");
  // arccos(1/v) written as atan(sqrt(v^2 - 1)) to keep accuracy as v -> 1+.
  return std::atan(std::sqrt((v - 1.0) * (v + 1.0)));
}

QuantumNumbers quantum_numbers(double omega, double k) {
  QuantumNumbers q;
  q.energy = omega;
  q.momentum = std::abs(k);
  q.mass_squared = (omega - k) * (omega + k);
  const double scale = std::max({1.0, omega * omega, k * k});
  if (std::abs(q.mass_squared) <= 1e-12 * scale) {
    q.kind = QuantumNumbers::Kind::massless;
    q.mass_squared = 0.0;
  } else {
    q.kind = q.mass_squared > 0 ? QuantumNumbers::Kind::massive : QuantumNumbers::Kind::tachyonic;
  }
  return q;
}

const char* to_string(QuantumNumbers::Kind k) {
  switch (k) {
    case QuantumNumbers::Kind::massive:
      return "massive";
    case QuantumNumbers::Kind::massless:
      return "massless";
    case QuantumNumbers::Kind::tachyonic:
      return "tachyonic";
  }
  return "?";
}

// ---------------------------------------------------------------- plane wave

PlaneWave::PlaneWave(double omega, std::array<double, 3> kvec, cplx amplitude)
    : omega_(omega), kvec_(kvec), amplitude_(amplitude) {}

cplx PlaneWave::value(const Point4& p) const {
  return amplitude_ * std::exp(kI * (omega_ * p[0] - kvec_[0] * p[1] - kvec_[1] * p[2] - kvec_[2] * p[3]));
}

ScalarJet PlaneWave::jet(const Point4& p) const { return linear_phase(wave_covector(), p) * amplitude_; }

// ---------------------------------------------------------- cylinder modes

Jet cylinder_mode_jet(bool modified, int n, double Omega, double x, double y) {
  const double rho = std::hypot(x, y);
  const double theta = std::atan2(y, x);
  if (modified && rho == 0.0) throw DomainError("modified Bessel mode is singular on the axis (rho = 0)");
  const double s = modified ? -1.0 : 1.0;
  // M_j = Z_j(Omega rho) e^{i j theta}, with the ladder
  //   (dx + i dy) M_j = -Omega M_{j+1},  (dx - i dy) M_j = s Omega M_{j-1}.
  auto mode = [&](int j) -> cplx {
    const double z = modified ? bessel_k(j, Omega * rho) : bessel_j(j, Omega * rho);
    return z * std::exp(kI * double(j) * theta);
  };
  const cplx m0 = mode(n), mp1 = mode(n + 1), mm1 = mode(n - 1), mp2 = mode(n + 2), mm2 = mode(n - 2);
  const cplx dplus = -Omega * mp1;
  const cplx dminus = s * Omega * mm1;
  const cplx dpp = Omega * Omega * mp2;
  const cplx dmm = Omega * Omega * mm2;
  const cplx dpm = -s * Omega * Omega * m0;

  Jet j;
  j.value = m0;
  j.grad[1] = 0.5 * (dplus + dminus);
  j.grad[2] = (dplus - dminus) / (2.0 * kI);
  j.hess[1][1] = 0.25 * (dpp + 2.0 * dpm + dmm);
  j.hess[2][2] = -0.25 * (dpp - 2.0 * dpm + dmm);
  j.hess[1][2] = j.hess[2][1] = (dpp - dmm) / (4.0 * kI);
  return j;
}

// ----------------------------------------------------------- spherical beam

SphericalBeam::SphericalBeam(const SphericalBeamParams& p) : p_(p) {
  require_finite(p.Omega, "Omega");
  require_finite(p.v, "v");
  if (p.Omega <= 0) throw DomainError("spherical beam: Omega must be > 0");
  if (p.l < 0 || p.l > 15) throw DomainError("spherical beam: l must be in 0..15");
  if (std::abs(p.m) > p.l) throw DomainError("spherical beam: |m| must not exceed l");
  if (p.branch == Branch::subluminal) {
    if (!(p.v >= 0.0 && p.v < 1.0)) throw DomainError("subluminal spherical beam needs 0 <= v < 1");
    gamma_ = 1.0 / std::sqrt((1.0 - p.v) * (1.0 + p.v));
  } else {
    if (!(p.v > 1.0)) throw DomainError("superluminal spherical beam needs v > 1");
    gamma_ = 1.0 / std::sqrt((p.v - 1.0) * (p.v + 1.0));
  }
  omega_ = gamma_ * p.Omega;
  k_ = gamma_ * p.v * p.Omega;
  if (p.omega || p.k) {
    if (!(p.omega && p.k)) throw DomainError("spherical beam: override both omega and k or neither");
    omega_ = *p.omega;
    k_ = *p.k;
    check_dispersion({p.branch, p.Omega, omega_, k_}, "spherical beam");
  }
  legendre_derivative_coeffs(p.l, std::abs(p.m), poly_.data());
}

SphericalBeam SphericalBeam::simple(Branch branch, double Omega, double v, double amplitude) {
  SphericalBeamParams p;
  p.branch = branch;
  p.Omega = Omega;
  p.v = v;
  p.amplitude = amplitude * Omega;
  return SphericalBeam(p);
}

double SphericalBeam::xi_squared(const Point4& q) const {
  const double tau = gamma_ * (q[3] - p_.v * q[0]);
  return sign_of(p_.branch) * (q[1] * q[1] + q[2] * q[2]) + tau * tau;
}

ScalarJet SphericalBeam::jet(const Point4& q) const {
  const Jet t = coordinate(0, q), x = coordinate(1, q), y = coordinate(2, q), z = coordinate(3, q);
  const Jet tau = (z - t * p_.v) * gamma_;
  const Jet xi2 = (x * x + y * y) * sign_of(p_.branch) + tau * tau;
  const int l = p_.l;
  const int am = std::abs(p_.m);

  // j_l(Omega xi) / xi^l = Omega^l E_l(Omega^2 xi^2).
  const Jet radial = entire_spherical(l, xi2 * (p_.Omega * p_.Omega)) * std::pow(p_.Omega, l);
  // sin^m(theta') e^{i m phi} xi^m -> (x +/- i y)^|m|; the superluminal branch
  // differs by the constant i^m, absorbed in the amplitude.
  const Jet w = p_.m >= 0 ? x + y * kI : x - y * kI;
  // xi^(l-m) d^m P_l(tau / xi) as a polynomial in tau and xi^2.
  Jet h;
  for (int k = l - am; k >= 0; k -= 2) {
    if (poly_[k] == 0.0) continue;
    h += tau.pow(k) * xi2.pow((l - am - k) / 2) * poly_[k];
  }
  const Jet phase = linear_phase({omega_, 0.0, 0.0, -k_}, q);
  return radial * w.pow(am) * h * phase * p_.amplitude;
}

std::string SphericalBeam::name() const {
  return std::string("spherical-") + to_string(p_.branch) + "(l=" + std::to_string(p_.l) +
         ",m=" + std::to_string(p_.m) + ")";
}

// ------------------------------------------------------------ bessel beams

BesselBeam::BesselBeam(int n, const Dispersion& d, double amplitude) : n_(n), d_(d), amplitude_(amplitude) {
  if (d.branch != Branch::subluminal) throw DomainError("Bessel beam needs the subluminal branch");
  check_dispersion(d, "Bessel beam");
}

cplx BesselBeam::value(const Point4& p) const {
  const double rho = std::hypot(p[1], p[2]);
  const double theta = std::atan2(p[2], p[1]);
  return amplitude_ * bessel_j(n_, d_.Omega * rho) *
         std::exp(kI * (d_.k * p[3] - d_.omega * p[0] + n_ * theta));
}

ScalarJet BesselBeam::jet(const Point4& p) const {
  return cylinder_mode_jet(false, n_, d_.Omega, p[1], p[2]) * linear_phase({-d_.omega, 0.0, 0.0, d_.k}, p) *
         amplitude_;
}

AxiconBeam::AxiconBeam(int n, double kbar, double eta, double amplitude)
    : n_(n), kbar_(kbar), eta_(eta), amplitude_(amplitude) {
  if (!(kbar > 0) || !std::isfinite(kbar)) throw DomainError("axicon beam: kbar must be > 0");
  if (!(eta > 0.0 && eta < std::acos(0.0))) throw DomainError("axicon beam: eta must lie in (0, pi/2)");
}

cplx AxiconBeam::value(const Point4& p) const {
  const double rho = std::hypot(p[1], p[2]);
  const double theta = std::atan2(p[2], p[1]);
  const double omega = kbar_;
  return amplitude_ * bessel_j(n_, kbar_ * rho * std::sin(eta_)) *
         std::exp(kI * (kbar_ * p[3] * std::cos(eta_) - omega * p[0] + n_ * theta));
}

ScalarJet AxiconBeam::jet(const Point4& p) const {
  return cylinder_mode_jet(false, n_, kbar_ * std::sin(eta_), p[1], p[2]) *
         linear_phase({-kbar_, 0.0, 0.0, kbar_ * std::cos(eta_)}, p) * amplitude_;
}

BesselBeam AxiconBeam::as_bessel_beam() const {
  Dispersion d;
  d.branch = Branch::subluminal;
  d.omega = kbar_;
  d.k = kbar_ * std::cos(eta_);
  d.Omega = kbar_ * std::sin(eta_);
  return BesselBeam(n_, d, amplitude_);
}

double AxiconBeam::phase_velocity() const { return kbar_ / (kbar_ * std::cos(eta_)); }

ModifiedBesselBeam::ModifiedBesselBeam(int n, const Dispersion& d, double amplitude)
    : n_(n), d_(d), amplitude_(amplitude) {
  if (d.branch != Branch::superluminal) throw DomainError("modified Bessel beam needs the superluminal branch");
  if (!(d.Omega > 0)) throw DomainError("modified Bessel beam needs Omega > 0");
  check_dispersion(d, "modified Bessel beam");
}

cplx ModifiedBesselBeam::value(const Point4& p) const {
  const double rho = std::hypot(p[1], p[2]);
  if (rho == 0.0) throw DomainError("modified Bessel beam is singular on the axis (rho = 0)");
  const double theta = std::atan2(p[2], p[1]);
  return amplitude_ * bessel_k(n_, d_.Omega * rho) *
         std::exp(kI * (d_.k * p[3] - d_.omega * p[0] + n_ * theta));
}

ScalarJet ModifiedBesselBeam::jet(const Point4& p) const {
  return cylinder_mode_jet(true, n_, d_.Omega, p[1], p[2]) * linear_phase({-d_.omega, 0.0, 0.0, d_.k}, p) *
         amplitude_;
}

// ------------------------------------------------------------ sinh profiles

const char* to_string(SinhReading r) {
  switch (r) {
    case SinhReading::literal:
      return "literal";
    case SinhReading::scaled:
      return "scaled";
    case SinhReading::time_limit:
      return "time-limit";
  }
  return "?";
}

SinhProfile::SinhProfile(double Omega, SinhReading reading, double amplitude)
    : Omega_(Omega), reading_(reading), amplitude_(amplitude) {
  if (!(Omega > 0) || !std::isfinite(Omega)) throw DomainError("sinh profile: Omega must be > 0");
}

ScalarJet SinhProfile::jet(const Point4& q) const {
  const Jet t = coordinate(0, q), x = coordinate(1, q), y = coordinate(2, q);
  const Jet rho2 = x * x + y * y;
  // sinh(a rho)/rho = a E_0(-a^2 rho^2);  sin(a s)/s = a E_0(a^2 s^2).
  const double a = reading_ == SinhReading::literal ? 1.0 : Omega_;
  const Jet arg = reading_ == SinhReading::time_limit ? (t * t - rho2) * (a * a) : rho2 * (-a * a);
  const Jet phase = linear_phase({0.0, 0.0, 0.0, Omega_}, q);
  return entire_spherical(0, arg) * phase * (a * amplitude_);
}

std::string SinhProfile::name() const { return std::string("sinh-") + to_string(reading_); }

ScalarJet JetExpression::jet(const Point4& p) const {
  return fn_(coordinate(0, p), coordinate(1, p), coordinate(2, p), coordinate(3, p));
}

}  // namespace cliffwave
