#pragma once

// Finite-difference Dirac operator and wave-equation residuals on 4D grids,
// with convergence-order estimation under grid refinement.
//
// Two entry points:
//  - SampledField + dirac_fd: explicit storage, for small grids and tests.
//  - residual reports: refinement sweeps over a fixed physical window. The
//    field is sampled one t-slice at a time into a rolling buffer of
//    2w+1 slices (w = stencil half width), so a 33^4 window costs a few MB.
//
// The window points themselves are where residuals are measured; samples
// out to w spacings beyond the window feed the stencils. No point outside
// the window contributes to a norm.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cliffwave/clifford.hpp"
#include "cliffwave/spacetime.hpp"
#include "cliffwave/wave_solutions.hpp"

namespace cliffwave {

enum class FdScheme { order2, order4 };
constexpr int stencil_half_width(FdScheme s) { return s == FdScheme::order2 ? 1 : 2; }
constexpr int scheme_order(FdScheme s) { return s == FdScheme::order2 ? 2 : 4; }
const char* to_string(FdScheme s);

struct Grid4 {
  Point4 origin{};
  std::array<double, 4> spacing{1, 1, 1, 1};
  std::array<int, 4> extents{1, 1, 1, 1};  // points per axis

  void validate() const;
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t index(const std::array<int, 4>& i) const;
  [[nodiscard]] Point4 point(const std::array<int, 4>& i) const;
  // The grid with `w` points removed from both ends of every axis.
  [[nodiscard]] Grid4 shrink(int w) const;
};

class SampledField {
 public:
  SampledField() = default;
  explicit SampledField(const Grid4& g);

  [[nodiscard]] const Grid4& grid() const { return grid_; }
  [[nodiscard]] CMultivector& at(const std::array<int, 4>& i) { return values_[grid_.index(i)]; }
  [[nodiscard]] const CMultivector& at(const std::array<int, 4>& i) const { return values_[grid_.index(i)]; }
  [[nodiscard]] const std::vector<CMultivector>& values() const { return values_; }
  [[nodiscard]] std::vector<CMultivector>& values() { return values_; }

 private:
  Grid4 grid_;
  std::vector<CMultivector> values_;
};

SampledField sample(const ComplexField& f, const Grid4& g, int threads = 1);

// g_mu d_mu f on the interior grid (origin shifted, extents reduced by 2w).
// Throws DomainError if an axis has fewer than 2w + 1 points.
SampledField dirac_fd(const SampledField& f, FdScheme scheme = FdScheme::order2);

// Central-difference partial d_mu f on the interior grid.
SampledField partial_fd(const SampledField& f, int mu, FdScheme scheme = FdScheme::order2);

// For input of a single grade r: the largest coefficient norm of d f outside
// grades r - 1 and r + 1. Mixed-grade input is rejected.
double grade_split_check(const SampledField& f, FdScheme scheme = FdScheme::order2);

// Norms at one refinement level.
struct LevelNorm {
  double h = 0.0;        // largest spacing of the level
  double rms = 0.0;      // trapezoid-weighted RMS of the residual norm over the window
  double max = 0.0;      // max of the residual norm
  double scale = 0.0;    // same average of the derivative-term magnitude (field scale)
  double rel_rms = 0.0;  // rms / scale (rms when scale = 0)
  std::size_t points = 0;
  std::size_t excluded = 0;
};

struct OrderEstimate {
  bool exact = false;  // every norm at or below the floor (or nonpositive)
  double order = 0.0;  // least-squares slope of log(norm) against log(h)
  double fit_rms = 0.0;
};

inline constexpr double kExactFloor = 1e-14;

// Needs >= 3 levels.
OrderEstimate convergence_order(const std::vector<std::pair<double, double>>& h_norm,
                                double floor = kExactFloor);

struct ResidualReport {
  std::string label;
  FdScheme scheme = FdScheme::order2;
  std::vector<LevelNorm> levels;
  OrderEstimate order;
  // Romberg extrapolation of rel_rms to h = 0 over all levels, eliminating
  // h^p, h^(p+2), ... for a scheme of order p.
  double extrapolated_rel_rms = 0.0;
  // First Romberg column only: (q fine - coarse) / (q - 1), q = 2^p.
  double richardson_rel_rms = 0.0;

  [[nodiscard]] std::vector<std::pair<double, double>> rel_series() const;
};

// Fixed physical window [lo, hi] refined with base_cells * 2^level cells per
// axis, level = 0 .. levels-1.
struct RefinementSpec {
  Point4 lo{};
  Point4 hi{};
  std::array<int, 4> base_cells{8, 8, 8, 8};
  int levels = 3;
  FdScheme scheme = FdScheme::order2;
  int threads = 1;
  // Points for which this returns true are dropped from the norms; it
  // receives the level's spacings.
  std::function<bool(const Point4&, const std::array<double, 4>&)> exclude;

  void validate() const;
  [[nodiscard]] Grid4 window(int level) const;
};

// Finite-difference data at a window point.
template <typename V>
struct StencilData {
  const Point4& p;
  const V& value;
  const std::array<V, 4>& d1;  // first partials
  const std::array<V, 4>& d2;  // second partials d_mu d_mu (only if requested)
};

// (residual magnitude, derivative-term magnitude) at a point.
template <typename V>
using PointOp = std::function<std::pair<double, double>(const StencilData<V>&)>;

template <typename V>
using SampleFn = std::function<V(const Point4&)>;

// One level of the streaming sweep.
template <typename V>
LevelNorm sweep_level(const SampleFn<V>& f, const Grid4& window, FdScheme scheme, bool second,
                      const PointOp<V>& op, const RefinementSpec& spec);

// All levels plus order estimate.
template <typename V>
ResidualReport residual_report(std::string label, const SampleFn<V>& f, const RefinementSpec& spec, bool second,
                               const PointOp<V>& op);

extern template LevelNorm sweep_level<cplx>(const SampleFn<cplx>&, const Grid4&, FdScheme, bool,
                                            const PointOp<cplx>&, const RefinementSpec&);
extern template LevelNorm sweep_level<CMultivector>(const SampleFn<CMultivector>&, const Grid4&, FdScheme, bool,
                                                    const PointOp<CMultivector>&, const RefinementSpec&);
extern template ResidualReport residual_report<cplx>(std::string, const SampleFn<cplx>&, const RefinementSpec&,
                                                     bool, const PointOp<cplx>&);
extern template ResidualReport residual_report<CMultivector>(std::string, const SampleFn<CMultivector>&,
                                                             const RefinementSpec&, bool,
                                                             const PointOp<CMultivector>&);

// || d F || (Weyl equation).
ResidualReport weyl_residual(const ComplexField& F, const RefinementSpec& spec);
LevelNorm weyl_residual(const SampledField& F, FdScheme scheme = FdScheme::order2);

// || d psi g21 - m psi g0 || (Dirac-Hestenes equation).
ResidualReport dirac_hestenes_residual(const ComplexField& psi, double mass, const RefinementSpec& spec);

// || d_tt Phi - d_xx Phi - d_yy Phi - d_zz Phi ||.
ResidualReport dalembertian_residual(const std::function<cplx(const Point4&)>& phi, const RefinementSpec& spec);
ResidualReport dalembertian_residual(const ScalarSolution& phi, const RefinementSpec& spec);

// Central-difference partials of a field at one point (spacing h per axis).
std::array<CMultivector, 4> fd_partials(const ComplexField& f, const Point4& p, const std::array<double, 4>& h,
                                        FdScheme scheme = FdScheme::order2);

}  // namespace cliffwave
