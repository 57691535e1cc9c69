#pragma once

// Exterior algebra on six generators dx1,dx2,dx3,dy1,dy2,dy3 (bits 0..5).
// A monomial is stored under its bitmask with generators in increasing order.

#include "attractor/mat3.hpp"

#include <array>
#include <bit>

namespace attractor {

template <class S>
struct Form6 {
  std::array<S, 64> c;
  Form6() { c.fill(S(0)); }
};

/// Sign of moving the generators of b past those of a (a, b disjoint).
inline int wedge_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned j = 0; j < 6; ++j)
    if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
  return (swaps & 1) ? -1 : 1;
}

template <class S>
Form6<S> wedge(const Form6<S>& a, const Form6<S>& b) {
  Form6<S> out;
  for (unsigned ma = 0; ma < 64; ++ma) {
    if (a.c[ma] == S(0)) continue;
    for (unsigned mb = 0; mb < 64; ++mb) {
      if ((ma & mb) || b.c[mb] == S(0)) continue;
      S t = a.c[ma] * b.c[mb];
      if (wedge_sign(ma, mb) < 0) t = -t;
      out.c[ma | mb] += t;
    }
  }
  return out;
}

/// Holomorphic 3-form Omega = (dx1 + sum_j T_1j dy_j) ^ (dx2 + ...) ^ (dx3 + ...).
template <class F>
Form6<F> holomorphic_form(const Mat3<F>& T) {
  Form6<F> omega;
  omega.c[0] = F(1);
  for (int i = 0; i < 3; ++i) {
    Form6<F> one;
    one.c[1u << i] = F(1);
    for (int j = 0; j < 3; ++j) one.c[1u << (3 + j)] = T[i][j];
    omega = wedge(omega, one);
  }
  return omega;
}

/// Integral of a top form against the orientation dx1 dy1 dx2 dy2 dx3 dy3,
/// which is minus the canonical monomial dx1 dx2 dx3 dy1 dy2 dy3.
template <class S>
S integrate_top(const Form6<S>& f) {
  return -f.c[63];
}

}  // namespace attractor
