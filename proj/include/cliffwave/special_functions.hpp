#pragma once

// Special functions used by the wave-solution catalog. Accuracy target is
// 1e-10 relative (absolute near zeros) for orders up to 12 and arguments up
// to a few hundred.
//
// Legendre convention: the Condon-Shortley phase (-1)^m is NOT included,
// P_l^m(x) = (1 - x^2)^(m/2) d^m/dx^m P_l(x) >= 0 near x = 0+ for m = l.

namespace cliffwave {

// Below this argument bessel_j uses its power series; above, Miller's
// downward recurrence normalized by J_0 + 2 sum J_2k = 1.
inline constexpr double kBesselSeriesSwitch = 12.0;
// K_n uses its logarithmic series up to here and Steed's continued fraction
// beyond.
inline constexpr double kBesselKSeriesSwitch = 2.0;

// J_n(x) for integer n (negative n via J_-n = (-1)^n J_n) and real x.
double bessel_j(int n, double x);

// Spherical Bessel j_l(x), l >= 0.
double spherical_j(int l, double x);

// j_l(sqrt(u)) / sqrt(u)^l as an entire function of u, valid for u < 0 too
// (where it equals the modified spherical Bessel i_l(sqrt(-u)) / sqrt(-u)^l).
double spherical_j_entire(int l, double u);

// Modified Bessel K_n(x) for x > 0 (K_-n = K_n). x <= 0 is rejected.
double bessel_k(int n, double x);

// Associated Legendre P_l^m(x), 0 <= m <= l, |x| <= 1, no Condon-Shortley phase.
double legendre_p(int l, int m, double x);

// Coefficients c_k of d^m/dx^m P_l(x) = sum_k c_k x^k (size l - m + 1).
// Used to continue P_l^m polynomially outside [-1, 1].
void legendre_derivative_coeffs(int l, int m, double* out);

}  // namespace cliffwave
