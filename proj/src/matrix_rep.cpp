#include "cliffwave/matrix_rep.hpp"

#include <array>

namespace cliffwave {

namespace {

std::array<Matrix4c, 4> build_gammas() {
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  std::array<Eigen::Matrix2cd, 3> sigma;
  sigma[0] << 0, 1, 1, 0;
  sigma[1] << 0, -i, i, 0;
  sigma[2] << 1, 0, 0, -1;

  std::array<Matrix4c, 4> g;
  g[0].setZero();
  g[0].topLeftCorner<2, 2>() = id;
  g[0].bottomRightCorner<2, 2>() = -id;
  for (int k = 0; k < 3; ++k) {
    g[k + 1].setZero();
    g[k + 1].topRightCorner<2, 2>() = sigma[k];
    g[k + 1].bottomLeftCorner<2, 2>() = -sigma[k];
  }
  return g;
}

// Matrices of the 16 ascending-index blades, and their inverses.
struct BladeMatrices {
  std::array<Matrix4c, 16> rep;
  std::array<Matrix4c, 16> inv;
};

const BladeMatrices& blade_matrices() {
  static const BladeMatrices bm = [] {
    BladeMatrices out;
    for (int mask = 0; mask < 16; ++mask) {
      Matrix4c m = Matrix4c::Identity();
      for (int mu = 0; mu < 4; ++mu)
        if ((mask >> mu) & 1) m = m * gamma_matrix(mu);
      out.rep[mask] = m;
      out.inv[mask] = m.inverse();
    }
    return out;
  }();
  return bm;
}

}  // namespace

const Matrix4c& gamma_matrix(int mu) {
  static const std::array<Matrix4c, 4> g = build_gammas();
  if (mu < 0 || mu > 3) throw DomainError("gamma index must be in 0..3");
  return g[mu];
}

Matrix4c matrix_rep(const CMultivector& a) {
  const auto& bm = blade_matrices();
  Matrix4c m = Matrix4c::Zero();
  for (int mask = 0; mask < 16; ++mask) m += a.coeff(mask) * bm.rep[mask];
  return m;
}

CMultivector from_matrix(const Matrix4c& m) {
  const auto& bm = blade_matrices();
  CMultivector a;
  for (int mask = 0; mask < 16; ++mask) a.coeff(mask) = (m * bm.inv[mask]).trace() / 4.0;
  return a;
}

}  // namespace cliffwave
