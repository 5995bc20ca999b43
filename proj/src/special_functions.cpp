#include "cliffwave/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cliffwave/errors.hpp"

namespace cliffwave {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double bessel_j_series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= half / k;
  double sum = term;
  const double q = half * half;
  for (int k = 0; k < 500; ++k) {
    term *= -q / ((k + 1.0) * (n + k + 1.0));
    sum += term;
    if (std::abs(term) < kEps * 1e-2 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

double bessel_j_miller(int n, double x) {
  const int top = std::max(n, static_cast<int>(x));
  const int start = 2 * ((top + 20 + static_cast<int>(std::sqrt(60.0 * top))) / 2);
  const double two_over_x = 2.0 / x;
  double jp = 0.0;    // J_{k+1}
  double jk = 1e-30;  // J_k
  double norm = 0.0;
  double result = 0.0;
  constexpr double kBig = 1e250;
  for (int k = start; k > 0; --k) {
    const double jm = k * two_over_x * jk - jp;  // J_{k-1}
    jp = jk;
    jk = jm;
    if (std::abs(jk) > kBig) {
      jk /= kBig;
      jp /= kBig;
      norm /= kBig;
      result /= kBig;
    }
    // jk now holds J_{k-1}
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * jk;
    if (k - 1 == n) result = jk;
  }
  norm += jk;  // J_0
  return result / norm;
}

double spherical_j_series(int l, double x) {
  // x^l / (2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
  double lead = 1.0;
  for (int k = 1; k <= l; ++k) lead *= x / (2.0 * k + 1.0);
  double term = 1.0;
  double sum = 1.0;
  const double q = -0.5 * x * x;
  for (int k = 1; k < 200; ++k) {
    term *= q / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < kEps * 1e-2 * std::abs(sum)) break;
  }
  return lead * sum;
}

double k_series0(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double harmonic = 0.0;
  double i0 = 1.0;
  double tail = 0.0;
  for (int k = 1; k < 100; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
    if (term < kEps * 1e-2 * i0) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0 + tail;
}

double k_series1(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;  // q^k / (k! (k+1)!)
  double psi_k1 = -kEulerGamma;        // psi(k+1)
  double psi_k2 = 1.0 - kEulerGamma;   // psi(k+2)
  double i1_sum = term;
  double tail = (psi_k1 + psi_k2) * term;
  for (int k = 1; k < 100; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1.0));
    psi_k1 += 1.0 / k;
    psi_k2 += 1.0 / (k + 1.0);
    i1_sum += term;
    tail += (psi_k1 + psi_k2) * term;
    if (term < kEps * 1e-2 * i1_sum) break;
  }
  const double i1 = 0.5 * x * i1_sum;
  return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * tail;
}

// Steed's continued fraction (Temme) for K_0 and K_1, x >= 2.
void k_steed(double x, double& k0, double& k1) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double delh = d;
  double h = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  if (i > 100000) throw NumericalError("bessel_k: continued fraction did not converge");
  h *= a1;
  k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  k1 = k0 * (x + 0.5 - h) / x;
}

}  // namespace

double bessel_j(int n, double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j: argument must be finite");
  double sign = 1.0;
  if (n < 0) {
    n = -n;
    if (n % 2) sign = -sign;
  }
  if (x < 0) {
    x = -x;
    if (n % 2) sign = -sign;
  }
  if (x == 0.0) return n == 0 ? sign : 0.0;
  const double v = x < kBesselSeriesSwitch ? bessel_j_series(n, x) : bessel_j_miller(n, x);
  return sign * v;
}

double spherical_j(int l, double x) {
  if (l < 0) throw DomainError("spherical_j: order must be >= 0");
  if (!std::isfinite(x)) throw DomainError("spherical_j: argument must be finite");
  double sign = 1.0;
  if (x < 0) {
    x = -x;
    if (l % 2) sign = -1.0;
  }
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  if (x < 1.0) return sign * spherical_j_series(l, x);

  const double s = std::sin(x);
  const double c = std::cos(x);
  const double j0 = s / x;
  if (l == 0) return sign * j0;
  const double j1 = s / (x * x) - c / x;
  if (l == 1) return sign * j1;

  if (x >= l) {
    double jm = j0;
    double jc = j1;
    for (int k = 1; k < l; ++k) {
      const double jn = (2.0 * k + 1.0) / x * jc - jm;
      jm = jc;
      jc = jn;
    }
    return sign * jc;
  }

  // Miller: downward from well above l, normalized on the larger of j0, j1.
  const int start = l + 20 + static_cast<int>(x);
  double jp = 0.0;
  double jk = 1e-30;
  double at_l = 0.0;
  double at_0 = 0.0;
  double at_1 = 0.0;
  for (int k = start; k > 0; --k) {
    const double jm = (2.0 * k + 1.0) / x * jk - jp;  // j_{k-1}
    jp = jk;
    jk = jm;
    if (std::abs(jk) > 1e250) {
      jk *= 1e-250;
      jp *= 1e-250;
      at_l *= 1e-250;
      at_1 *= 1e-250;
    }
    if (k - 1 == l) at_l = jk;
    if (k - 1 == 1) at_1 = jk;
  }
  at_0 = jk;
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / at_0 : j1 / at_1;
  return sign * at_l * scale;
}

double spherical_j_entire(int l, double u) {
  if (l < 0) throw DomainError("spherical_j_entire: order must be >= 0");
  if (u <= 1.0) {
    // sum_k (-u/2)^k / (k! (2l+2k+1)!!); all terms positive for u <= 0.
    double df = 1.0;
    for (int k = 1; k <= l; ++k) df *= 2.0 * k + 1.0;
    double term = 1.0 / df;
    double sum = term;
    const double q = -0.5 * u;
    for (int k = 1; k < 2000; ++k) {
      term *= q / (k * (2.0 * l + 2.0 * k + 1.0));
      sum += term;
      if (std::abs(term) < kEps * 1e-2 * std::abs(sum)) break;
    }
    return sum;
  }
  const double z = std::sqrt(u);
  return spherical_j(l, z) / std::pow(z, l);
}

double bessel_k(int n, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: argument must be > 0 (K_n diverges at 0)");
  if (n < 0) n = -n;
  double k0 = 0.0;
  double k1 = 0.0;
  if (x <= kBesselKSeriesSwitch) {
    k0 = k_series0(x);
    k1 = k_series1(x);
  } else {
    k_steed(x, k0, k1);
  }
  if (n == 0) return k0;
  double km = k0;
  double kc = k1;
  for (int k = 1; k < n; ++k) {
    const double kn = km + 2.0 * k / x * kc;
    km = kc;
    kc = kn;
  }
  return kc;
}

double legendre_p(int l, int m, double x) {
  if (l < 0 || m < 0 || m > l)
    throw DomainError("legendre_p: need 0 <= m <= l (got l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
  if (!(std::abs(x) <= 1.0)) throw DomainError("legendre_p: |x| must be <= 1");
  double pmm = 1.0;
  if (m > 0) {
    const double root = std::sqrt((1.0 - x) * (1.0 + x));
    double odd = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= odd * root;
      odd += 2.0;
    }
  }
  if (l == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pm1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pm1;
    pm1 = pll;
  }
  return pll;
}

void legendre_derivative_coeffs(int l, int m, double* out) {
  if (l < 0 || m < 0 || m > l) throw DomainError("legendre_derivative_coeffs: need 0 <= m <= l");
  // P_l(x) = sum_j (-1)^j (2l-2j)! / (2^l j! (l-j)! (l-2j)!) x^(l-2j)
  std::vector<double> p(l + 1, 0.0);
  for (int j = 0; 2 * j <= l; ++j) {
    double c = std::tgamma(2.0 * l - 2.0 * j + 1.0) /
               (std::pow(2.0, l) * std::tgamma(j + 1.0) * std::tgamma(l - j + 1.0) *
                std::tgamma(l - 2.0 * j + 1.0));
    if (j % 2) c = -c;
    p[l - 2 * j] = c;
  }
  for (int d = 0; d < m; ++d) {
    for (int k = 0; k < l; ++k) p[k] = (k + 1) * p[k + 1];
    p[l - d] = 0.0;
  }
  for (int k = 0; k <= l - m; ++k) out[k] = p[k];
}

}  // namespace cliffwave
