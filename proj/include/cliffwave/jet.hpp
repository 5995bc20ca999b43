#pragma once

// Second-order forward-mode differentiation in the four spacetime
// coordinates: a Jet carries a complex value, its gradient and its
// (symmetric) Hessian. Closed-form solutions are written once in terms of
// Jet arithmetic and yield exact first and second partials.

#include <array>
#include <complex>

namespace cliffwave {

struct Jet {
  using cplx = std::complex<double>;

  cplx value{};
  std::array<cplx, 4> grad{};
  std::array<std::array<cplx, 4>, 4> hess{};

  static Jet constant(cplx v) {
    Jet j;
    j.value = v;
    return j;
  }
  static Jet variable(int mu, double v) {
    Jet j;
    j.value = v;
    j.grad[mu] = 1.0;
    return j;
  }

  Jet& operator+=(const Jet& o) {
    value += o.value;
    for (int a = 0; a < 4; ++a) {
      grad[a] += o.grad[a];
      for (int b = 0; b < 4; ++b) hess[a][b] += o.hess[a][b];
    }
    return *this;
  }
  Jet& operator*=(cplx s) {
    value *= s;
    for (int a = 0; a < 4; ++a) {
      grad[a] *= s;
      for (int b = 0; b < 4; ++b) hess[a][b] *= s;
    }
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) {
    Jet nb = b;
    nb *= -1.0;
    return a += nb;
  }
  friend Jet operator*(Jet a, cplx s) { return a *= s; }
  friend Jet operator*(cplx s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, cplx s) {
    a.value += s;
    return a;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    r.value = a.value * b.value;
    for (int i = 0; i < 4; ++i) {
      r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
      for (int k = 0; k < 4; ++k)
        r.hess[i][k] = a.hess[i][k] * b.value + a.grad[i] * b.grad[k] + a.grad[k] * b.grad[i] +
                       a.value * b.hess[i][k];
    }
    return r;
  }

  // f(u) given f(u0), f'(u0), f''(u0).
  [[nodiscard]] Jet compose(cplx f, cplx df, cplx d2f) const {
    Jet r;
    r.value = f;
    for (int i = 0; i < 4; ++i) {
      r.grad[i] = df * grad[i];
      for (int k = 0; k < 4; ++k) r.hess[i][k] = df * hess[i][k] + d2f * grad[i] * grad[k];
    }
    return r;
  }

  [[nodiscard]] Jet pow(int n) const {
    Jet r = constant(1.0);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }
};

inline Jet exp(const Jet& u) {
  const auto e = std::exp(u.value);
  return u.compose(e, e, e);
}

}  // namespace cliffwave
