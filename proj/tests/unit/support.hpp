#pragma once

// Shared helpers and independent oracles for the unit tests. Nothing here
// calls into the library's special functions or products: the oracles are
// what the library is checked against.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "cliffwave/clifford.hpp"

namespace cwtest {

using cliffwave::CMultivector;
using cliffwave::cplx;
using cliffwave::Multivector;

inline constexpr std::uint64_t kSeed = 20240917;

inline Multivector random_mv(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Multivector m;
  for (int i = 0; i < 16; ++i) m.coeff(i) = u(rng);
  return m;
}

inline CMultivector random_cmv(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  CMultivector m;
  for (int i = 0; i < 16; ++i) m.coeff(i) = cplx(u(rng), u(rng));
  return m;
}

inline Multivector random_even(std::mt19937_64& rng) { return random_mv(rng).even_part(); }
inline CMultivector random_ceven(std::mt19937_64& rng) { return random_cmv(rng).even_part(); }

// J_n(x) by its defining power series in long double; adequate for x < 20.
inline double series_j(int n, double x) {
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= static_cast<long double>(x) / (2.0L * k);
  long double sum = term;
  const long double q = -static_cast<long double>(x) * x / 4.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + n));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

// Root of f in [a, b] by bisection.
template <typename F>
double bisect(F&& f, double a, double b, double tol = 1e-15) {
  double fa = f(a);
  while (b - a > tol * std::max(1.0, std::abs(a))) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Relative coefficient error between two multivectors.
template <typename T>
double rel_err(const cliffwave::BasicMultivector<T>& a, const cliffwave::BasicMultivector<T>& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace cwtest
