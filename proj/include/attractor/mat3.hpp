#pragma once

#include "attractor/scalar.hpp"

#include <array>
#include <stdexcept>

namespace attractor {

template <class S>
using Mat3 = std::array<std::array<S, 3>, 3>;

template <class S>
Mat3<S> zero3() {
  Mat3<S> m;
  for (auto& row : m) row.fill(S(0));
  return m;
}

template <class S>
Mat3<S> identity3() {
  Mat3<S> m = zero3<S>();
  for (int i = 0; i < 3; ++i) m[i][i] = S(1);
  return m;
}

template <class S>
Mat3<S> diag3(const S& a, const S& b, const S& c) {
  Mat3<S> m = zero3<S>();
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

template <class S>
Mat3<S> scalar3(const S& s) {
  return diag3(s, s, s);
}

/// Entrywise conversion, e.g. Rational -> QuadNumber or int -> Rational.
template <class T, class S>
Mat3<T> cast3(const Mat3<S>& a) {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = T(a[i][j]);
  return m;
}

template <class S>
Mat3<S> transpose(const Mat3<S>& a) {
  Mat3<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[j][i];
  return m;
}

template <class S>
Mat3<S> operator+(const Mat3<S>& a, const Mat3<S>& b) {
  Mat3<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i][j] + b[i][j];
  return m;
}

template <class S>
Mat3<S> operator-(const Mat3<S>& a, const Mat3<S>& b) {
  Mat3<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i][j] - b[i][j];
  return m;
}

template <class S>
Mat3<S> operator-(const Mat3<S>& a) {
  Mat3<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = -a[i][j];
  return m;
}

template <class S>
Mat3<S> scale(const S& s, const Mat3<S>& a) {
  Mat3<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = s * a[i][j];
  return m;
}

template <class S>
Mat3<S> matmul(const Mat3<S>& a, const Mat3<S>& b) {
  Mat3<S> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      S acc = a[i][0] * b[0][j];
      acc += a[i][1] * b[1][j];
      acc += a[i][2] * b[2][j];
      m[i][j] = acc;
    }
  return m;
}

template <class S>
S trace(const Mat3<S>& a) {
  return a[0][0] + a[1][1] + a[2][2];
}

/// tr(A^T B) = sum_ij A_ij B_ij.
template <class S>
S trace_tn(const Mat3<S>& a, const Mat3<S>& b) {
  S acc(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += a[i][j] * b[i][j];
  return acc;
}

template <class S>
S det3(const Mat3<S>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// Signed 2x2 minors: A * Cof(A)^T = det(A) I.
template <class S>
Mat3<S> cofactor(const Mat3<S>& a) {
  Mat3<S> c;
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    for (int j = 0; j < 3; ++j) {
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // cyclic index order absorbs the (-1)^(i+j) sign
      c[i][j] = a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1];
    }
  }
  return c;
}

/// Polarization of the cofactor map: Cof(Y+P) - Cof(Y) - Cof(P).
template <class S>
Mat3<S> cofactor_bilinear(const Mat3<S>& y, const Mat3<S>& p) {
  Mat3<S> c;
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    for (int j = 0; j < 3; ++j) {
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      c[i][j] = y[i1][j1] * p[i2][j2] + p[i1][j1] * y[i2][j2] - y[i1][j2] * p[i2][j1] -
                p[i1][j2] * y[i2][j1];
    }
  }
  return c;
}

/// Throws std::domain_error on a singular matrix (exact zero determinant,
/// or exactly zero in floating point).
template <class S>
Mat3<S> inverse3(const Mat3<S>& a) {
  S d = det3(a);
  if (d == S(0)) throw std::domain_error("inverse3: singular matrix");
  Mat3<S> c = transpose(cofactor(a));
  S inv = S(1) / d;
  return scale(inv, c);
}

template <class S>
bool is_symmetric(const Mat3<S>& a) {
  return a[0][1] == a[1][0] && a[0][2] == a[2][0] && a[1][2] == a[2][1];
}

template <class S>
bool operator==(const Mat3<S>& a, const Mat3<S>& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

/// Entrywise real part.
template <class F>
auto real_part(const Mat3<F>& a) {
  using R = decltype(re(a[0][0]));
  Mat3<R> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = re(a[i][j]);
  return m;
}

template <class F>
Mat3<F> conj3(const Mat3<F>& a) {
  Mat3<F> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = conj(a[i][j]);
  return m;
}

inline Mat3<double> to_double(const Mat3<Rational>& a) {
  Mat3<double> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i][j].to_double();
  return m;
}

inline Mat3<cplx> to_complex(const Mat3<QuadNumber>& a) {
  Mat3<cplx> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i][j].to_complex();
  return m;
}

/// Frobenius distance between two complex matrices.
double frobenius_distance(const Mat3<cplx>& a, const Mat3<cplx>& b);

/// Exact positivity through leading principal minors.
bool is_positive_definite(const Mat3<Rational>& s);
/// Floating positivity through Cholesky with pivot threshold 1e-12.
bool is_positive_definite(const Mat3<double>& s);

/// Imaginary part of a float matrix.
Mat3<double> imag_part(const Mat3<cplx>& a);

/// Symmetric complex matrix with positive definite imaginary part.
template <class F>
bool in_siegel(const Mat3<F>& t);

template <>
inline bool in_siegel(const Mat3<cplx>& t) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(t[i][j] - t[j][i]) > 1e-12 * (1.0 + std::abs(t[i][j]))) return false;
  return is_positive_definite(imag_part(t));
}

/// Exact version: all entries must share one quadratic kernel k; Im(T) = B sqrt(k).
template <>
bool in_siegel(const Mat3<QuadNumber>& t);

}  // namespace attractor
