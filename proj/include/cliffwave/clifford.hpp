#pragma once

// Clifford algebra Cl(1,3) of Minkowski spacetime, signature (+,-,-,-).
//
// A multivector is stored as 16 coefficients indexed by blade bitmask: bit mu
// set means gamma_mu appears in the ascending-index product. The canonical
// presentation order (scalar, vectors, bivectors, trivectors, pseudoscalar;
// lexicographic within a grade) is available through canonical_blades().
//
// BasicMultivector<double> is the real algebra; BasicMultivector<cplx> is its
// complexification. Both come from the same template.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <type_traits>

#include "cliffwave/errors.hpp"

namespace cliffwave {

using cplx = std::complex<double>;

inline constexpr std::array<int, 4> kMetric = {1, -1, -1, -1};

struct Blade {
  std::uint8_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint8_t m) : mask(m) {}

  [[nodiscard]] constexpr int grade() const {
    int g = 0;
    for (int i = 0; i < 4; ++i) g += (mask >> i) & 1;
    return g;
  }
  [[nodiscard]] constexpr bool contains(int mu) const { return (mask >> mu) & 1; }
  constexpr bool operator==(const Blade&) const = default;
};

namespace detail {

// Sign of e_a * e_b = sign * e_(a xor b), ascending-index blades.
constexpr int blade_product_sign(std::uint8_t a, std::uint8_t b) {
  int swaps = 0;
  for (int i = 0; i < 4; ++i) {
    if ((b >> i) & 1) {
      for (int j = i + 1; j < 4; ++j) swaps += (a >> j) & 1;
    }
  }
  int sign = (swaps % 2) ? -1 : 1;
  const std::uint8_t common = a & b;
  for (int i = 0; i < 4; ++i) {
    if ((common >> i) & 1) sign *= kMetric[i];
  }
  return sign;
}

constexpr std::array<std::array<std::int8_t, 16>, 16> make_sign_table() {
  std::array<std::array<std::int8_t, 16>, 16> t{};
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      t[a][b] = static_cast<std::int8_t>(blade_product_sign(static_cast<std::uint8_t>(a),
                                                            static_cast<std::uint8_t>(b)));
  return t;
}

inline constexpr auto kSignTable = make_sign_table();

constexpr int popcount4(int m) { return (m & 1) + ((m >> 1) & 1) + ((m >> 2) & 1) + ((m >> 3) & 1); }

constexpr std::array<std::uint8_t, 16> make_canonical_order() {
  std::array<std::uint8_t, 16> order{};
  int k = 0;
  for (int g = 0; g <= 4; ++g) {
    // Lexicographic order of ascending index tuples equals descending order of
    // the reversed-bit pattern; a simple selection by comparing index lists.
    std::array<std::uint8_t, 6> bucket{};
    int n = 0;
    for (int m = 0; m < 16; ++m)
      if (popcount4(m) == g) bucket[n++] = static_cast<std::uint8_t>(m);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // compare ascending index lists lexicographically
        auto less = [](std::uint8_t x, std::uint8_t y) {
          int xi[4]{}, yi[4]{}, nx = 0, ny = 0;
          for (int b = 0; b < 4; ++b) {
            if ((x >> b) & 1) xi[nx++] = b;
            if ((y >> b) & 1) yi[ny++] = b;
          }
          for (int b = 0; b < nx; ++b)
            if (xi[b] != yi[b]) return xi[b] < yi[b];
          return false;
        };
        if (less(bucket[j], bucket[i])) {
          auto tmp = bucket[i];
          bucket[i] = bucket[j];
          bucket[j] = tmp;
        }
      }
    for (int i = 0; i < n; ++i) order[k++] = bucket[i];
  }
  return order;
}

template <typename T>
struct is_complex : std::false_type {};
template <typename R>
struct is_complex<std::complex<R>> : std::true_type {};

}  // namespace detail

// Blades in canonical order: 1, g0..g3, g01, g02, g03, g12, g13, g23, ..., g0123.
inline constexpr std::array<std::uint8_t, 16> kCanonicalBladeMasks = detail::make_canonical_order();

inline constexpr std::uint8_t kPseudoscalarMask = 0b1111;

template <typename T>
class BasicMultivector {
 public:
  using scalar_type = T;
  static constexpr int kSize = 16;

  constexpr BasicMultivector() : c_{} {}
  constexpr explicit BasicMultivector(T scalar) : c_{} { c_[0] = scalar; }

  // Real multivectors convert implicitly into the complexified algebra.
  template <typename U>
    requires(detail::is_complex<T>::value && std::is_same_v<U, double>)
  constexpr BasicMultivector(const BasicMultivector<U>& real) : c_{} {  // NOLINT
    for (int i = 0; i < kSize; ++i) c_[i] = T(real.coeff(i));
  }

  static constexpr BasicMultivector blade(Blade b, T coeff = T(1)) {
    BasicMultivector m;
    m.c_[b.mask] = coeff;
    return m;
  }

  // Generator gamma_mu, mu in 0..3.
  static BasicMultivector gamma(int mu) {
    if (mu < 0 || mu > 3) throw DomainError("gamma index must be in 0..3");
    return blade(Blade(static_cast<std::uint8_t>(1u << mu)));
  }

  // Ordered product of generators, e.g. product_of({2, 1}) == gamma_2 gamma_1.
  static BasicMultivector product_of(std::initializer_list<int> indices) {
    BasicMultivector m(T(1));
    for (int mu : indices) m = m * gamma(mu);
    return m;
  }

  static BasicMultivector pseudoscalar() { return blade(Blade(kPseudoscalarMask)); }

  static BasicMultivector vector(const std::array<T, 4>& comps) {
    BasicMultivector m;
    for (int mu = 0; mu < 4; ++mu) m.c_[1u << mu] = comps[mu];
    return m;
  }

  [[nodiscard]] constexpr T coeff(int mask) const { return c_[mask]; }
  [[nodiscard]] constexpr T& coeff(int mask) { return c_[mask]; }
  [[nodiscard]] constexpr T operator[](Blade b) const { return c_[b.mask]; }
  [[nodiscard]] constexpr T& operator[](Blade b) { return c_[b.mask]; }
  [[nodiscard]] constexpr T scalar() const { return c_[0]; }
  [[nodiscard]] const std::array<T, kSize>& data() const { return c_; }

  // Vector components (coefficients of gamma_0..gamma_3).
  [[nodiscard]] std::array<T, 4> vector_part() const {
    return {c_[1], c_[2], c_[4], c_[8]};
  }

  BasicMultivector& operator+=(const BasicMultivector& o) {
    for (int i = 0; i < kSize; ++i) c_[i] += o.c_[i];
    return *this;
  }
  BasicMultivector& operator-=(const BasicMultivector& o) {
    for (int i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  BasicMultivector& operator*=(T s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator-(BasicMultivector a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend BasicMultivector operator*(BasicMultivector a, T s) { return a *= s; }
  friend BasicMultivector operator*(T s, BasicMultivector a) { return a *= s; }
  friend BasicMultivector operator/(BasicMultivector a, T s) {
    for (auto& v : a.c_) v /= s;
    return a;
  }

  // Geometric product.
  friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
    BasicMultivector r;
    for (int i = 0; i < kSize; ++i) {
      if (a.c_[i] == T(0)) continue;
      for (int j = 0; j < kSize; ++j) {
        if (b.c_[j] == T(0)) continue;
        const int s = detail::kSignTable[i][j];
        r.c_[i ^ j] += s > 0 ? a.c_[i] * b.c_[j] : -(a.c_[i] * b.c_[j]);
      }
    }
    return r;
  }

  // Grade-r part; r outside 0..4 is rejected.
  [[nodiscard]] BasicMultivector grade(int r) const {
    if (r < 0 || r > 4) throw DomainError("grade must be in 0..4, got " + std::to_string(r));
    BasicMultivector m;
    for (int i = 0; i < kSize; ++i)
      if (detail::popcount4(i) == r) m.c_[i] = c_[i];
    return m;
  }
  [[nodiscard]] BasicMultivector even_part() const {
    BasicMultivector m;
    for (int i = 0; i < kSize; ++i)
      if (detail::popcount4(i) % 2 == 0) m.c_[i] = c_[i];
    return m;
  }
  [[nodiscard]] BasicMultivector odd_part() const { return *this - even_part(); }

  // Grade-r part scaled by (-1)^(r(r-1)/2).
  [[nodiscard]] BasicMultivector reverse() const {
    BasicMultivector m = *this;
    for (int i = 0; i < kSize; ++i) {
      const int r = detail::popcount4(i);
      if ((r * (r - 1) / 2) % 2) m.c_[i] = -m.c_[i];
    }
    return m;
  }
  [[nodiscard]] BasicMultivector grade_involution() const {
    BasicMultivector m = *this;
    for (int i = 0; i < kSize; ++i)
      if (detail::popcount4(i) % 2) m.c_[i] = -m.c_[i];
    return m;
  }

  // Euclidean norm of the coefficient vector.
  [[nodiscard]] double norm() const {
    double s = 0.0;
    for (const auto& v : c_) s += std::norm(v);
    return std::sqrt(s);
  }
  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }
  [[nodiscard]] double grade_norm(int r) const { return grade(r).norm(); }
  [[nodiscard]] bool is_even(double tol = 0.0) const { return odd_part().norm() <= tol; }

  bool operator==(const BasicMultivector&) const = default;

 private:
  std::array<T, kSize> c_;
};

using Multivector = BasicMultivector<double>;
using CMultivector = BasicMultivector<cplx>;

// Outer product: blade pairs whose product grade is the sum of the grades.
template <typename T>
BasicMultivector<T> wedge(const BasicMultivector<T>& a, const BasicMultivector<T>& b) {
  BasicMultivector<T> r;
  for (int i = 0; i < 16; ++i) {
    if (a.coeff(i) == T(0)) continue;
    for (int j = 0; j < 16; ++j) {
      if ((i & j) || b.coeff(j) == T(0)) continue;
      r.coeff(i | j) += T(detail::kSignTable[i][j]) * a.coeff(i) * b.coeff(j);
    }
  }
  return r;
}

// Left contraction a _| b: grade(b) - grade(a) part of each blade product.
template <typename T>
BasicMultivector<T> left_contract(const BasicMultivector<T>& a, const BasicMultivector<T>& b) {
  BasicMultivector<T> r;
  for (int i = 0; i < 16; ++i) {
    if (a.coeff(i) == T(0)) continue;
    for (int j = 0; j < 16; ++j) {
      if ((i & j) != i || b.coeff(j) == T(0)) continue;
      r.coeff(i ^ j) += T(detail::kSignTable[i][j]) * a.coeff(i) * b.coeff(j);
    }
  }
  return r;
}

// Right contraction a |_ b: grade(a) - grade(b) part of each blade product.
template <typename T>
BasicMultivector<T> right_contract(const BasicMultivector<T>& a, const BasicMultivector<T>& b) {
  BasicMultivector<T> r;
  for (int i = 0; i < 16; ++i) {
    if (a.coeff(i) == T(0)) continue;
    for (int j = 0; j < 16; ++j) {
      if ((i & j) != j || b.coeff(j) == T(0)) continue;
      r.coeff(i ^ j) += T(detail::kSignTable[i][j]) * a.coeff(i) * b.coeff(j);
    }
  }
  return r;
}

// Scalar part of the geometric product; equals the Minkowski inner product on
// vectors.
template <typename T>
T scalar_product(const BasicMultivector<T>& a, const BasicMultivector<T>& b) {
  T s(0);
  for (int i = 0; i < 16; ++i) s += T(detail::kSignTable[i][i]) * a.coeff(i) * b.coeff(i);
  return s;
}

// exp(a) for an element whose square is a scalar (simple bivectors, gamma5,
// vectors). Throws if a*a has a non-scalar part.
template <typename T>
BasicMultivector<T> exp_simple(const BasicMultivector<T>& a, double tol = 1e-12) {
  const BasicMultivector<T> sq = a * a;
  if ((sq - BasicMultivector<T>(sq.scalar())).norm() > tol * std::max(1.0, sq.norm()))
    throw DomainError("exp_simple: argument does not square to a scalar");
  const T s = sq.scalar();
  // cos/cosh unify through the complex square root of -s.
  if constexpr (detail::is_complex<T>::value) {
    const T lam = std::sqrt(-s);
    if (std::abs(lam) < 1e-300) return BasicMultivector<T>(T(1)) + a;
    return BasicMultivector<T>(std::cos(lam)) + a * (std::sin(lam) / lam);
  } else {
    if (s < 0) {
      const double lam = std::sqrt(-s);
      return BasicMultivector<T>(std::cos(lam)) + a * (std::sin(lam) / lam);
    }
    if (s > 0) {
      const double lam = std::sqrt(s);
      return BasicMultivector<T>(std::cosh(lam)) + a * (std::sinh(lam) / lam);
    }
    return BasicMultivector<T>(1.0) + a;
  }
}

// exp(angle * gamma5) = cos(angle) + gamma5 sin(angle), since gamma5^2 = -1.
template <typename T = double>
BasicMultivector<T> exp_gamma5(double angle) {
  BasicMultivector<T> m(T(std::cos(angle)));
  m.coeff(kPseudoscalarMask) = T(std::sin(angle));
  return m;
}

inline Multivector real_part(const CMultivector& m) {
  Multivector r;
  for (int i = 0; i < 16; ++i) r.coeff(i) = m.coeff(i).real();
  return r;
}
inline Multivector imag_part(const CMultivector& m) {
  Multivector r;
  for (int i = 0; i < 16; ++i) r.coeff(i) = m.coeff(i).imag();
  return r;
}

// Human-readable name of a blade mask, e.g. "g013".
std::string blade_name(std::uint8_t mask);

std::string to_string(const Multivector& m, int precision = 6);
std::string to_string(const CMultivector& m, int precision = 6);

// Frequently used constants.
namespace blades {
inline Multivector one() { return Multivector(1.0); }
inline Multivector g(int mu) { return Multivector::gamma(mu); }
inline Multivector g5() { return Multivector::pseudoscalar(); }
inline Multivector g21() { return Multivector::product_of({2, 1}); }
inline Multivector g03() { return Multivector::product_of({0, 3}); }
}  // namespace blades

}  // namespace cliffwave
