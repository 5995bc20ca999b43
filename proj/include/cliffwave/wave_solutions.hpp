#pragma once

// Closed-form solutions of the homogeneous wave equation
//   d^2 Phi / dt^2 - laplacian Phi = 0     (c = hbar = 1)
// with exact first and second partials, plus dispersion and kinematics
// helpers.
//
// Families:
//   SphericalBeam      j_l(Omega xi) P_l^m e^{i m phi} e^{i(omega t - k z)}, both branches
//   BesselBeam         J_n(Omega rho) e^{i(k z - omega t + n theta)},  omega^2 - k^2 = Omega^2
//   AxiconBeam         the same beam parameterized by (kbar, eta)
//   ModifiedBesselBeam K_n(Omega rho) e^{i(k z - omega t + n theta)}, omega^2 - k^2 = -Omega^2
//   PlaneWave          exp(i(omega t - kvec . x))
//   SinhProfile        sinh(a rho)/rho e^{i Omega z} and its time-dependent limit

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "cliffwave/clifford.hpp"
#include "cliffwave/jet.hpp"
#include "cliffwave/spacetime.hpp"

namespace cliffwave {

enum class Branch { subluminal, superluminal };

const char* to_string(Branch b);

struct Dispersion {
  Branch branch = Branch::subluminal;
  double Omega = 0.0;  // transverse parameter
  double omega = 0.0;  // angular frequency
  double k = 0.0;      // axial wavenumber

  // d omega / d k = k / omega on the hyperbola omega^2 - k^2 = +/- Omega^2.
  [[nodiscard]] double group_velocity() const { return k / omega; }
  [[nodiscard]] double phase_velocity() const { return omega / k; }
};

// Any two of the three quantities; the third is filled in.
struct DispersionInput {
  std::optional<double> omega;
  std::optional<double> k;
  std::optional<double> Omega;
};

// Rejects impossible combinations (e.g. subluminal with omega < Omega).
Dispersion dispersion_solve(Branch branch, const DispersionInput& given);

// eta = arccos(1 / v) for a front speed v > 1.
double axicon_fit(double v);

struct QuantumNumbers {
  double energy = 0.0;    // E = hbar omega
  double momentum = 0.0;  // |p| = hbar |k|
  double mass_squared = 0.0;
  enum class Kind { massive, massless, tachyonic } kind = Kind::massless;
};
QuantumNumbers quantum_numbers(double omega, double k);
const char* to_string(QuantumNumbers::Kind k);

// Value with exact gradient and Hessian.
using ScalarJet = Jet;

class ScalarSolution {
 public:
  virtual ~ScalarSolution() = default;
  [[nodiscard]] virtual cplx value(const Point4& p) const = 0;
  [[nodiscard]] virtual ScalarJet jet(const Point4& p) const = 0;
  [[nodiscard]] virtual std::array<cplx, 4> gradient(const Point4& p) const { return jet(p).grad; }
  [[nodiscard]] virtual std::string name() const = 0;
};

using ScalarSolutionPtr = std::shared_ptr<const ScalarSolution>;

class PlaneWave final : public ScalarSolution {
 public:
  // amplitude * exp(i(omega t - kx x - ky y - kz z))
  PlaneWave(double omega, std::array<double, 3> kvec, cplx amplitude = 1.0);
  [[nodiscard]] cplx value(const Point4& p) const override;
  [[nodiscard]] ScalarJet jet(const Point4& p) const override;
  [[nodiscard]] std::string name() const override { return "plane-wave"; }
  [[nodiscard]] std::array<double, 4> wave_covector() const { return {omega_, -kvec_[0], -kvec_[1], -kvec_[2]}; }

 private:
  double omega_;
  std::array<double, 3> kvec_;
  cplx amplitude_;
};

struct SphericalBeamParams {
  Branch branch = Branch::subluminal;
  double Omega = 1.0;
  double v = 0.0;  // group speed: [0,1) subluminal, (1,inf) superluminal
  int l = 0;
  int m = 0;
  double amplitude = 1.0;  // C_l
  // By default omega = gamma Omega and k = gamma v Omega, which makes the
  // envelope speed v equal to the group speed k / omega. Overrides must
  // still satisfy the dispersion relation; they exist to probe v != k/omega.
  std::optional<double> omega;
  std::optional<double> k;
};

// C_l j_l(Omega xi) P_l^m(cos theta') e^{i m phi} e^{i(omega t - k z)} with
//   xi^2 = +/-(x^2 + y^2) + gamma^2 (z - v t)^2,  cos theta' = gamma (z - v t) / xi,
// i.e. a boosted rest-frame multipole (theta' is the polar angle in the
// envelope frame, phi the azimuth). Evaluated as an entire function of
// (x, y, gamma(z - v t), xi^2), so xi = 0 and the superluminal region outside
// the cone (xi^2 < 0) need no special casing.
class SphericalBeam final : public ScalarSolution {
 public:
  explicit SphericalBeam(const SphericalBeamParams& p);

  // C sin(Omega xi)/xi e^{i(omega t - k z)}: the l = m = 0 beam with C_0 = C Omega.
  static SphericalBeam simple(Branch branch, double Omega, double v, double amplitude = 1.0);

  [[nodiscard]] cplx value(const Point4& p) const override { return jet(p).value; }
  [[nodiscard]] ScalarJet jet(const Point4& p) const override;
  [[nodiscard]] std::string name() const override;

  [[nodiscard]] const SphericalBeamParams& params() const { return p_; }
  [[nodiscard]] double gamma() const { return gamma_; }
  [[nodiscard]] double omega() const { return omega_; }
  [[nodiscard]] double k() const { return k_; }
  // xi^2 at a point (negative outside the superluminal cone).
  [[nodiscard]] double xi_squared(const Point4& p) const;

 private:
  SphericalBeamParams p_;
  double gamma_;
  double omega_;
  double k_;
  std::array<double, 16> poly_{};  // d^m P_l / dx^m coefficients
};

// C_n J_n(Omega rho) e^{i(k z - omega t + n theta)}, omega^2 - k^2 = Omega^2.
class BesselBeam final : public ScalarSolution {
 public:
  BesselBeam(int n, const Dispersion& d, double amplitude = 1.0);
  [[nodiscard]] cplx value(const Point4& p) const override;
  [[nodiscard]] ScalarJet jet(const Point4& p) const override;
  [[nodiscard]] std::string name() const override { return "bessel"; }
  [[nodiscard]] const Dispersion& dispersion() const { return d_; }
  [[nodiscard]] int order() const { return n_; }

 private:
  int n_;
  Dispersion d_;
  double amplitude_;
};

// C_n J_n(kbar rho sin eta) e^{i(kbar z cos eta - omega t + n theta)}, kbar = omega.
class AxiconBeam final : public ScalarSolution {
 public:
  AxiconBeam(int n, double kbar, double eta, double amplitude = 1.0);
  [[nodiscard]] cplx value(const Point4& p) const override;
  [[nodiscard]] ScalarJet jet(const Point4& p) const override;
  [[nodiscard]] std::string name() const override { return "axicon"; }
  // The same field expressed as a Bessel beam (k = kbar cos eta, Omega = kbar sin eta).
  [[nodiscard]] BesselBeam as_bessel_beam() const;
  [[nodiscard]] double phase_velocity() const;

 private:
  int n_;
  double kbar_;
  double eta_;
  double amplitude_;
};

// C_n K_n(Omega rho) e^{i(k z - omega t + n theta)}, omega^2 - k^2 = -Omega^2.
// Singular on the axis: evaluation at rho = 0 throws DomainError.
class ModifiedBesselBeam final : public ScalarSolution {
 public:
  ModifiedBesselBeam(int n, const Dispersion& d, double amplitude = 1.0);
  [[nodiscard]] cplx value(const Point4& p) const override;
  [[nodiscard]] ScalarJet jet(const Point4& p) const override;
  [[nodiscard]] std::string name() const override { return "modified-bessel"; }
  [[nodiscard]] const Dispersion& dispersion() const { return d_; }

 private:
  int n_;
  Dispersion d_;
  double amplitude_;
};

// Readings of the v -> infinity limit of the superluminal spherical beam.
enum class SinhReading {
  literal,       // C sinh(rho)/rho e^{i Omega z}
  scaled,        // C sinh(Omega rho)/rho e^{i Omega z}
  time_limit,    // C sin(Omega s)/s e^{i Omega z}, s^2 = t^2 - rho^2 (reduces to `scaled` at t = 0)
};
const char* to_string(SinhReading r);

class SinhProfile final : public ScalarSolution {
 public:
  SinhProfile(double Omega, SinhReading reading, double amplitude = 1.0);
  [[nodiscard]] cplx value(const Point4& p) const override { return jet(p).value; }
  [[nodiscard]] ScalarJet jet(const Point4& p) const override;
  [[nodiscard]] std::string name() const override;

 private:
  double Omega_;
  SinhReading reading_;
  double amplitude_;
};

// Scalar field given as a Jet expression in (t, x, y, z); handy for
// polynomial test fields and negative controls such as Phi = t^2.
class JetExpression final : public ScalarSolution {
 public:
  using Fn = std::function<Jet(const Jet& t, const Jet& x, const Jet& y, const Jet& z)>;
  JetExpression(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}
  [[nodiscard]] cplx value(const Point4& p) const override { return jet(p).value; }
  [[nodiscard]] ScalarJet jet(const Point4& p) const override;
  [[nodiscard]] std::string name() const override { return name_; }

 private:
  std::string name_;
  Fn fn_;
};

// Z_n(Omega rho) e^{i n theta} with Z = J (bessel) or K (modified), as a jet
// in (x, y). Uses the ladder relations (d/dx +/- i d/dy), so it is regular on
// the axis for J.
Jet cylinder_mode_jet(bool modified, int n, double Omega, double x, double y);

}  // namespace cliffwave
