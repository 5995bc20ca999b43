#include "cliffwave/field_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "cliffwave/errors.hpp"

namespace cliffwave {

namespace {

// First derivative: sum_k c_k (f(+k) - f(-k)) / h.
constexpr std::array<double, 2> kD1Order2 = {0.5, 0.0};
constexpr std::array<double, 2> kD1Order4 = {8.0 / 12.0, -1.0 / 12.0};
// Second derivative: (c_0 f + sum_k c_k (f(+k) + f(-k))) / h^2.
constexpr std::array<double, 3> kD2Order2 = {-2.0, 1.0, 0.0};
constexpr std::array<double, 3> kD2Order4 = {-30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0};

const std::array<double, 2>& d1_coeffs(FdScheme s) { return s == FdScheme::order2 ? kD1Order2 : kD1Order4; }
const std::array<double, 3>& d2_coeffs(FdScheme s) { return s == FdScheme::order2 ? kD2Order2 : kD2Order4; }

// Runs fn(begin, end) over [0, n) split across `threads` workers.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    const int b = n * w / threads, e = n * (w + 1) / threads;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : pool) th.join();
}

// Trapezoid weight of a window point: 1/2 per axis on which it lies on a
// face. Weighted means are then trapezoid averages over the window, whose
// error expands in even powers of h.
double trapezoid_weight(const std::array<int, 4>& i, const std::array<int, 4>& n) {
  double w = 1.0;
  for (int mu = 0; mu < 4; ++mu)
    if (n[mu] > 1 && (i[mu] == 0 || i[mu] == n[mu] - 1)) w *= 0.5;
  return w;
}

struct Accumulator {
  double sum_r2 = 0.0;  // weighted
  double max_r = 0.0;
  double sum_s2 = 0.0;  // weighted
  double sum_w = 0.0;
  std::size_t points = 0;
  std::size_t excluded = 0;

  void add(double r, double s, double w) {
    sum_r2 += w * r * r;
    max_r = std::max(max_r, r);
    sum_s2 += w * s * s;
    sum_w += w;
    ++points;
  }

  void merge(const Accumulator& o) {
    sum_r2 += o.sum_r2;
    max_r = std::max(max_r, o.max_r);
    sum_s2 += o.sum_s2;
    sum_w += o.sum_w;
    points += o.points;
    excluded += o.excluded;
  }
};

LevelNorm finish(const Accumulator& acc, double h) {
  LevelNorm n;
  n.h = h;
  n.points = acc.points;
  n.excluded = acc.excluded;
  if (acc.points == 0) return n;
  n.rms = std::sqrt(acc.sum_r2 / acc.sum_w);
  n.max = acc.max_r;
  n.scale = std::sqrt(acc.sum_s2 / acc.sum_w);
  n.rel_rms = n.scale > 0 ? n.rms / n.scale : n.rms;
  return n;
}

}  // namespace

const char* to_string(FdScheme s) { return s == FdScheme::order2 ? "order2" : "order4"; }

// ------------------------------------------------------------------ Grid4

void Grid4::validate() const {
  for (int mu = 0; mu < 4; ++mu) {
    if (!(spacing[mu] > 0) || !std::isfinite(spacing[mu])) throw DomainError("grid spacing must be positive");
    if (extents[mu] < 1) throw DomainError("grid extents must be positive");
  }
}

std::size_t Grid4::size() const {
  std::size_t n = 1;
  for (int e : extents) n *= static_cast<std::size_t>(e);
  return n;
}

std::size_t Grid4::index(const std::array<int, 4>& i) const {
  return ((static_cast<std::size_t>(i[0]) * extents[1] + i[1]) * extents[2] + i[2]) * extents[3] + i[3];
}

Point4 Grid4::point(const std::array<int, 4>& i) const {
  Point4 p;
  for (int mu = 0; mu < 4; ++mu) p[mu] = origin[mu] + i[mu] * spacing[mu];
  return p;
}

Grid4 Grid4::shrink(int w) const {
  Grid4 g = *this;
  for (int mu = 0; mu < 4; ++mu) {
    if (extents[mu] < 2 * w + 1)
      throw DomainError("grid too small for the stencil: axis " + std::to_string(mu) + " has " +
                        std::to_string(extents[mu]) + " points, needs " + std::to_string(2 * w + 1));
    g.origin[mu] += w * spacing[mu];
    g.extents[mu] -= 2 * w;
  }
  return g;
}

SampledField::SampledField(const Grid4& g) : grid_(g) {
  g.validate();
  values_.resize(g.size());
}

SampledField sample(const ComplexField& f, const Grid4& g, int threads) {
  SampledField out(g);
  parallel_for(g.extents[0], threads, [&](int b, int e) {
    for (int i0 = b; i0 < e; ++i0)
      for (int i1 = 0; i1 < g.extents[1]; ++i1)
        for (int i2 = 0; i2 < g.extents[2]; ++i2)
          for (int i3 = 0; i3 < g.extents[3]; ++i3) {
            const std::array<int, 4> i{i0, i1, i2, i3};
            out.at(i) = f(g.point(i));
          }
  });
  return out;
}

SampledField partial_fd(const SampledField& f, int mu, FdScheme scheme) {
  if (mu < 0 || mu > 3) throw DomainError("partial index must be in 0..3");
  const int w = stencil_half_width(scheme);
  const Grid4 inner = f.grid().shrink(w);
  const auto& c = d1_coeffs(scheme);
  const double h = f.grid().spacing[mu];
  SampledField out(inner);
  for (int i0 = 0; i0 < inner.extents[0]; ++i0)
    for (int i1 = 0; i1 < inner.extents[1]; ++i1)
      for (int i2 = 0; i2 < inner.extents[2]; ++i2)
        for (int i3 = 0; i3 < inner.extents[3]; ++i3) {
          const std::array<int, 4> o{i0, i1, i2, i3};
          std::array<int, 4> src{i0 + w, i1 + w, i2 + w, i3 + w};
          CMultivector d;
          for (int k = 1; k <= w; ++k) {
            auto plus = src, minus = src;
            plus[mu] += k;
            minus[mu] -= k;
            d += (f.at(plus) - f.at(minus)) * cplx(c[k - 1] / h);
          }
          out.at(o) = d;
        }
  return out;
}

SampledField dirac_fd(const SampledField& f, FdScheme scheme) {
  SampledField out(f.grid().shrink(stencil_half_width(scheme)));
  for (int mu = 0; mu < 4; ++mu) {
    const SampledField d = partial_fd(f, mu, scheme);
    const CMultivector g = CMultivector::gamma(mu);
    for (std::size_t i = 0; i < d.values().size(); ++i) out.values()[i] += g * d.values()[i];
  }
  return out;
}

double grade_split_check(const SampledField& f, FdScheme scheme) {
  std::array<double, 5> content{};
  double total = 0.0;
  for (const auto& v : f.values()) {
    for (int r = 0; r <= 4; ++r) content[r] = std::max(content[r], v.grade_norm(r));
    total = std::max(total, v.norm());
  }
  int grade = -1;
  for (int r = 0; r <= 4; ++r) {
    if (content[r] <= 1e-14 * std::max(total, 1e-300)) continue;
    if (grade >= 0) throw DomainError("grade_split_check needs a field of a single grade");
    grade = r;
  }
  if (grade < 0) return 0.0;
  const SampledField d = dirac_fd(f, scheme);
  double leak = 0.0;
  for (const auto& v : d.values()) {
    CMultivector rest = v;
    if (grade >= 1) rest -= v.grade(grade - 1);
    if (grade <= 3) rest -= v.grade(grade + 1);
    leak = std::max(leak, rest.norm());
  }
  return leak;
}

std::array<CMultivector, 4> fd_partials(const ComplexField& f, const Point4& p, const std::array<double, 4>& h,
                                        FdScheme scheme) {
  const int w = stencil_half_width(scheme);
  const auto& c = d1_coeffs(scheme);
  std::array<CMultivector, 4> d;
  for (int mu = 0; mu < 4; ++mu) {
    for (int k = 1; k <= w; ++k) {
      Point4 a = p, b = p;
      a[mu] += k * h[mu];
      b[mu] -= k * h[mu];
      d[mu] += (f(a) - f(b)) * cplx(c[k - 1] / h[mu]);
    }
  }
  return d;
}

// ------------------------------------------------------------ convergence

OrderEstimate convergence_order(const std::vector<std::pair<double, double>>& h_norm, double floor) {
  if (h_norm.size() < 3) throw DomainError("convergence order needs at least 3 refinement levels");
  OrderEstimate est;
  bool all_small = true;
  for (const auto& [h, n] : h_norm) {
    if (!(h > 0)) throw DomainError("convergence order: spacings must be positive");
    if (n <= 0) {
      est.exact = true;
      return est;
    }
    if (n > floor) all_small = false;
  }
  if (all_small) {
    est.exact = true;
    return est;
  }
  const double m = static_cast<double>(h_norm.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [h, n] : h_norm) {
    const double x = std::log(h), y = std::log(n);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  if (!(denom > 1e-12 * m * sxx)) throw DomainError("convergence order: spacings must differ");
  est.order = (m * sxy - sx * sy) / denom;
  const double icpt = (sy - est.order * sx) / m;
  double ss = 0;
  for (const auto& [h, n] : h_norm) {
    const double r = std::log(n) - (icpt + est.order * std::log(h));
    ss += r * r;
  }
  est.fit_rms = std::sqrt(ss / m);
  return est;
}

std::vector<std::pair<double, double>> ResidualReport::rel_series() const {
  std::vector<std::pair<double, double>> s;
  for (const auto& l : levels) s.emplace_back(l.h, l.rel_rms);
  return s;
}

// ------------------------------------------------------- refinement sweeps

void RefinementSpec::validate() const {
  for (int mu = 0; mu < 4; ++mu) {
    if (!(hi[mu] > lo[mu])) throw DomainError("refinement window needs hi > lo on every axis");
    if (base_cells[mu] < 1) throw DomainError("refinement base cells must be >= 1");
  }
  if (levels < 1) throw DomainError("refinement needs at least one level");
  if (threads < 1) throw DomainError("thread count must be >= 1");
}

Grid4 RefinementSpec::window(int level) const {
  Grid4 g;
  g.origin = lo;
  for (int mu = 0; mu < 4; ++mu) {
    const int cells = base_cells[mu] << level;
    g.extents[mu] = cells + 1;
    g.spacing[mu] = (hi[mu] - lo[mu]) / cells;
  }
  return g;
}

template <typename V>
LevelNorm sweep_level(const SampleFn<V>& f, const Grid4& window, FdScheme scheme, bool second, const PointOp<V>& op,
                      const RefinementSpec& spec) {
  window.validate();
  const int w = stencil_half_width(scheme);
  const auto& c1 = d1_coeffs(scheme);
  const auto& c2 = d2_coeffs(scheme);
  const auto& h = window.spacing;
  const int ex = window.extents[1] + 2 * w, ey = window.extents[2] + 2 * w, ez = window.extents[3] + 2 * w;
  const std::size_t slice_size = static_cast<std::size_t>(ex) * ey * ez;
  const int ring = 2 * w + 1;
  std::vector<std::vector<V>> slices(ring, std::vector<V>(slice_size));
  auto sidx = [ey, ez](int x, int y, int z) { return (static_cast<std::size_t>(x) * ey + y) * ez + z; };
  auto slot = [ring, w](int it) { return ((it + w) % ring + ring) % ring; };

  const int threads = std::max(1, spec.threads);
  // One accumulator per x row, merged in row order: the sums do not depend
  // on how rows are split across workers.
  std::vector<Accumulator> acc(window.extents[1]);

  for (int it = -w; it < window.extents[0] + w; ++it) {
    auto& buf = slices[slot(it)];
    const double t = window.origin[0] + it * h[0];
    parallel_for(ex, threads, [&](int b, int e) {
      for (int x = b; x < e; ++x)
        for (int y = 0; y < ey; ++y)
          for (int z = 0; z < ez; ++z) {
            const Point4 p{t, window.origin[1] + (x - w) * h[1], window.origin[2] + (y - w) * h[2],
                           window.origin[3] + (z - w) * h[3]};
            buf[sidx(x, y, z)] = f(p);
          }
    });
    const int ct = it - w;  // slice whose stencil is now complete
    if (ct < 0) continue;
    const double tc = window.origin[0] + ct * h[0];
    const int nx = window.extents[1];
    auto work = [&](int b, int e) {
      std::array<V, 4> d1{}, d2{};
      for (int i = b; i < e; ++i)
        for (int j = 0; j < window.extents[2]; ++j)
          for (int k = 0; k < window.extents[3]; ++k) {
            const int x = i + w, y = j + w, z = k + w;
            const Point4 p{tc, window.origin[1] + i * h[1], window.origin[2] + j * h[2],
                           window.origin[3] + k * h[3]};
            Accumulator& a = acc[i];
            if (spec.exclude && spec.exclude(p, h)) {
              ++a.excluded;
              continue;
            }
            const V& center = slices[slot(ct)][sidx(x, y, z)];
            // Offsets along t come from neighbouring slices, space within the slice.
            auto at = [&](int mu, int off) -> const V& {
              switch (mu) {
                case 0:
                  return slices[slot(ct + off)][sidx(x, y, z)];
                case 1:
                  return slices[slot(ct)][sidx(x + off, y, z)];
                case 2:
                  return slices[slot(ct)][sidx(x, y + off, z)];
                default:
                  return slices[slot(ct)][sidx(x, y, z + off)];
              }
            };
            for (int mu = 0; mu < 4; ++mu) {
              V d{};
              for (int s = 1; s <= w; ++s) d += (at(mu, s) - at(mu, -s)) * (c1[s - 1] / h[mu]);
              d1[mu] = d;
              if (second) {
                V dd = center * (c2[0] / (h[mu] * h[mu]));
                for (int s = 1; s <= w; ++s) dd += (at(mu, s) + at(mu, -s)) * (c2[s] / (h[mu] * h[mu]));
                d2[mu] = dd;
              }
            }
            const auto [r, sc] = op(StencilData<V>{p, center, d1, d2});
            a.add(r, sc, trapezoid_weight({ct, i, j, k}, window.extents));
          }
    };
    parallel_for(nx, threads, work);
  }
  Accumulator total;
  for (const auto& a : acc) total.merge(a);
  return finish(total, *std::max_element(h.begin(), h.end()));
}

namespace {

// Romberg table on rel_rms over the `use` finest levels, eliminating
// h^p, h^(p+2), ... in turn (central differences and trapezoid means both
// expand in even powers).
double richardson(const std::vector<LevelNorm>& levels, int p, std::size_t use) {
  use = std::min(use, levels.size());
  const std::size_t first = levels.size() - use;
  std::vector<double> col;
  for (std::size_t i = first; i < levels.size(); ++i) col.push_back(levels[i].rel_rms);
  for (std::size_t j = 1; j < use; ++j) {
    std::vector<double> next;
    for (std::size_t i = j; i < use; ++i) {
      const double ratio = levels[first + i - 1].h / levels[first + i].h;
      const double q = std::pow(ratio, p + 2.0 * (j - 1));
      next.push_back(col[i - j + 1] + (col[i - j + 1] - col[i - j]) / (q - 1.0));
    }
    col = std::move(next);
  }
  return col.back();
}

}  // namespace

template <typename V>
ResidualReport residual_report(std::string label, const SampleFn<V>& f, const RefinementSpec& spec, bool second,
                               const PointOp<V>& op) {
  spec.validate();
  ResidualReport rep;
  rep.label = std::move(label);
  rep.scheme = spec.scheme;
  for (int l = 0; l < spec.levels; ++l) {
    rep.levels.push_back(sweep_level<V>(f, spec.window(l), spec.scheme, second, op, spec));
    if (rep.levels.back().points == 0)
      throw NumericalError(rep.label + ": every window point was excluded at refinement level " + std::to_string(l));
  }
  if (rep.levels.size() >= 3) {
    rep.order = convergence_order(rep.rel_series());
  } else {
    rep.order.order = std::numeric_limits<double>::quiet_NaN();
  }
  rep.richardson_rel_rms = richardson(rep.levels, scheme_order(spec.scheme), 2);
  rep.extrapolated_rel_rms = richardson(rep.levels, scheme_order(spec.scheme), rep.levels.size());
  return rep;
}

template LevelNorm sweep_level<cplx>(const SampleFn<cplx>&, const Grid4&, FdScheme, bool, const PointOp<cplx>&,
                                     const RefinementSpec&);
template LevelNorm sweep_level<CMultivector>(const SampleFn<CMultivector>&, const Grid4&, FdScheme, bool,
                                             const PointOp<CMultivector>&, const RefinementSpec&);
template ResidualReport residual_report<cplx>(std::string, const SampleFn<cplx>&, const RefinementSpec&, bool,
                                              const PointOp<cplx>&);
template ResidualReport residual_report<CMultivector>(std::string, const SampleFn<CMultivector>&,
                                                      const RefinementSpec&, bool, const PointOp<CMultivector>&);

// ------------------------------------------------------- named residuals

namespace {

double derivative_scale(const std::array<CMultivector, 4>& d) {
  double s = 0.0;
  for (const auto& v : d) s += v.norm() * v.norm();
  return std::sqrt(s);
}

}  // namespace

ResidualReport weyl_residual(const ComplexField& F, const RefinementSpec& spec) {
  PointOp<CMultivector> op = [](const StencilData<CMultivector>& s) {
    return std::pair{dirac_from_partials(s.d1).norm(), derivative_scale(s.d1)};
  };
  return residual_report<CMultivector>("weyl", F, spec, false, op);
}

LevelNorm weyl_residual(const SampledField& F, FdScheme scheme) {
  const int w = stencil_half_width(scheme);
  const Grid4 inner = F.grid().shrink(w);
  std::array<SampledField, 4> d;
  for (int mu = 0; mu < 4; ++mu) d[mu] = partial_fd(F, mu, scheme);
  Accumulator acc;
  std::array<int, 4> ix{};
  for (ix[0] = 0; ix[0] < inner.extents[0]; ++ix[0])
    for (ix[1] = 0; ix[1] < inner.extents[1]; ++ix[1])
      for (ix[2] = 0; ix[2] < inner.extents[2]; ++ix[2])
        for (ix[3] = 0; ix[3] < inner.extents[3]; ++ix[3]) {
          const std::size_t i = inner.index(ix);
          const std::array<CMultivector, 4> di{d[0].values()[i], d[1].values()[i], d[2].values()[i],
                                               d[3].values()[i]};
          acc.add(dirac_from_partials(di).norm(), derivative_scale(di), trapezoid_weight(ix, inner.extents));
        }
  return finish(acc, *std::max_element(inner.spacing.begin(), inner.spacing.end()));
}

ResidualReport dirac_hestenes_residual(const ComplexField& psi, double mass, const RefinementSpec& spec) {
  if (!(mass >= 0)) throw DomainError("Dirac-Hestenes mass must be >= 0");
  const CMultivector g21 = CMultivector::product_of({2, 1});
  const CMultivector g0 = CMultivector::gamma(0);
  PointOp<CMultivector> op = [=](const StencilData<CMultivector>& s) {
    const CMultivector r = dirac_from_partials(s.d1) * g21 - cplx(mass) * (s.value * g0);
    const double sc = std::hypot(derivative_scale(s.d1), mass * s.value.norm());
    return std::pair{r.norm(), sc};
  };
  return residual_report<CMultivector>("dirac-hestenes", psi, spec, false, op);
}

ResidualReport dalembertian_residual(const std::function<cplx(const Point4&)>& phi, const RefinementSpec& spec) {
  PointOp<cplx> op = [](const StencilData<cplx>& s) {
    const cplx r = s.d2[0] - s.d2[1] - s.d2[2] - s.d2[3];
    double sc = 0.0;
    for (const auto& v : s.d2) sc += std::norm(v);
    return std::pair{std::abs(r), std::sqrt(sc)};
  };
  return residual_report<cplx>("dalembertian", phi, spec, true, op);
}

ResidualReport dalembertian_residual(const ScalarSolution& phi, const RefinementSpec& spec) {
  auto rep = dalembertian_residual([&phi](const Point4& p) { return phi.value(p); }, spec);
  rep.label = "dalembertian:" + phi.name();
  return rep;
}

}  // namespace cliffwave
