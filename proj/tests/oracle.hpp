#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include "attractor/quad_number.hpp"
#include "attractor/rational.hpp"

#include <array>
#include <complex>
#include <vector>

namespace oracle {

template <class T>
using M3 = std::array<std::array<T, 3>, 3>;

// Leibniz expansion over the six permutations.
template <class T>
T det3(const M3<T>& a) {
  static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  T s(0);
  for (int p = 0; p < 6; ++p) {
    T t = a[0][perm[p][0]] * a[1][perm[p][1]] * a[2][perm[p][2]];
    if (p < 3)
      s = s + t;
    else
      s = s - t;
  }
  return s;
}

// (-1)^(i+j) times the minor deleting row i and column j.
template <class T>
T cofactor_entry(const M3<T>& a, int i, int j) {
  T m[2][2];
  int r = 0;
  for (int x = 0; x < 3; ++x) {
    if (x == i) continue;
    int c = 0;
    for (int y = 0; y < 3; ++y) {
      if (y == j) continue;
      m[r][c++] = a[x][y];
    }
    ++r;
  }
  T v = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return ((i + j) % 2) ? T(0) - v : v;
}

template <class T>
M3<T> cofactor(const M3<T>& a) {
  M3<T> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = cofactor_entry(a, i, j);
  return c;
}

// Fraction-free Gaussian elimination determinant for a rational square matrix.
inline attractor::Rational det(std::vector<std::vector<attractor::Rational>> m) {
  using attractor::Rational;
  const std::size_t n = m.size();
  Rational d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d = d * m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
    }
  }
  return d;
}

// Coefficients of (1+H)^(n+1)/(1+dH) up to H^(n-1), by long division.
inline std::vector<attractor::Rational> hypersurface_chern(int n, int d) {
  using attractor::Rational;
  std::vector<Rational> num(n + 2, Rational(0));
  // binomial coefficients
  Rational b(1);
  for (int k = 0; k <= n + 1; ++k) {
    num[k] = b;
    b = b * Rational(n + 1 - k) / Rational(k + 1);
  }
  std::vector<Rational> q(n, Rational(0));
  for (int k = 0; k < n; ++k) {
    q[k] = num[k];
    num[k + 1] = num[k + 1] - Rational(d) * q[k];
  }
  return q;
}

}  // namespace oracle
