#pragma once

// Dirac-representation gamma matrices. Serves as an independent oracle for
// the blade-table product in clifford.hpp: the map is an algebra
// homomorphism onto the full 4x4 complex matrix algebra.

#include <Eigen/Dense>

#include "cliffwave/clifford.hpp"

namespace cliffwave {

using Matrix4c = Eigen::Matrix<cplx, 4, 4>;

// Dirac gamma matrix for gamma_mu.
const Matrix4c& gamma_matrix(int mu);

Matrix4c matrix_rep(const CMultivector& a);
inline Matrix4c matrix_rep(const Multivector& a) { return matrix_rep(CMultivector(a)); }

// Inverse map by trace projection: c_B = tr(M rep(B)^-1) / 4.
CMultivector from_matrix(const Matrix4c& m);

}  // namespace cliffwave
