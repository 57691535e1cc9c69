#pragma once

// Complex and Kähler attractors on the 6-torus in closed form.
//
// A charge is gamma = q0 A_0 + sum Q_ij A_ij + sum P^ij B^ij + p0 B^0 and the
// attractor equation gamma^PD = Re(C Omega) becomes
//   Re(C) = p0, Re(C A) = P, Re(C Cof A) = -Q, Re(C det A) = q0.

#include "attractor/errors.hpp"
#include "attractor/mat3.hpp"
#include "attractor/matrix.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace attractor {

template <class S>
struct TorusChargeT {
  S p0{0};
  Mat3<S> P = zero3<S>();
  Mat3<S> Q = zero3<S>();
  S q0{0};

  bool is_zero() const {
    if (!(p0 == S(0)) || !(q0 == S(0))) return false;
    return P == zero3<S>() && Q == zero3<S>();
  }
  bool symmetric() const { return is_symmetric(P) && is_symmetric(Q); }
  TorusChargeT operator-() const { return {-p0, -P, -Q, -q0}; }
  friend bool operator==(const TorusChargeT& a, const TorusChargeT& b) {
    return a.p0 == b.p0 && a.P == b.P && a.Q == b.Q && a.q0 == b.q0;
  }
};

/// Mukai-vector coefficients v0 delta_0 + sum v^ij delta_ij + sum u_ij eps^ij + u0 eps^0.
template <class S>
struct KahlerTorusChargeT {
  S v0{0};
  Mat3<S> V = zero3<S>();
  Mat3<S> U = zero3<S>();
  S u0{0};

  friend bool operator==(const KahlerTorusChargeT& a, const KahlerTorusChargeT& b) {
    return a.v0 == b.v0 && a.V == b.V && a.U == b.U && a.u0 == b.u0;
  }
};

using TorusCharge = TorusChargeT<Rational>;
using TorusChargeF = TorusChargeT<double>;
using KahlerTorusCharge = KahlerTorusChargeT<Rational>;
using KahlerTorusChargeF = KahlerTorusChargeT<double>;

template <class T, class S>
TorusChargeT<T> cast_charge(const TorusChargeT<S>& c) {
  return {T(c.p0), cast3<T>(c.P), cast3<T>(c.Q), T(c.q0)};
}

inline TorusChargeF to_float(const TorusCharge& c) {
  return {c.p0.to_double(), to_double(c.P), to_double(c.Q), c.q0.to_double()};
}

template <class S>
struct AttractorInvariantsT {
  Mat3<S> R;
  S M;
  S D;
};

enum class Branch { PlusGeneral, MinusGeneral, SymmetricSiegel };

std::string to_string(Branch b);

template <class S>
struct AttractorSolutionT {
  field_t<S> C;
  Mat3<field_t<S>> A;
  Branch branch;
};

using AttractorSolution = AttractorSolutionT<Rational>;
using AttractorSolutionF = AttractorSolutionT<double>;

template <class S>
struct KahlerSolutionT {
  field_t<S> C;
  Mat3<field_t<S>> Omega;
};

/// R = Cof(P) + p0 Q,
/// M = 2 det P + p0^2 q0 + p0 tr(P^T Q),
/// D = 2((tr P^T Q)^2 - tr((P^T Q)^2)) - (p0 q0 + tr P^T Q)^2 + 4(p0 det Q - q0 det P).
template <class S>
AttractorInvariantsT<S> invariants(const TorusChargeT<S>& c) {
  AttractorInvariantsT<S> inv;
  inv.R = cofactor(c.P) + scale(c.p0, c.Q);
  const S t = trace_tn(c.P, c.Q);
  inv.M = S(2) * det3(c.P) + c.p0 * c.p0 * c.q0 + c.p0 * t;
  const Mat3<S> ptq = matmul(transpose(c.P), c.Q);
  const S pq = c.p0 * c.q0 + t;
  inv.D = S(2) * (t * t - trace(matmul(ptq, ptq))) - pq * pq +
          S(4) * (c.p0 * det3(c.Q) - c.q0 * det3(c.P));
  return inv;
}

namespace detail {

template <class S>
Mat3<field_t<S>> lift(const Mat3<S>& m) {
  return cast3<field_t<S>>(m);
}

inline void require_nonzero(bool zero) {
  if (zero) throw std::invalid_argument("torus charge is identically zero");
}

}  // namespace detail

/// Both solutions of the four equations, PlusGeneral first:
///   C = p0 +- M sqrt(-D)/D,
///   A = (2 P Q^T - (p0 q0 + tr P^T Q) I -+ sqrt(-D) I) ((2R)^-1)^T.
/// Throws NoAttractor unless det R > 0 and D > 0.
template <class S>
std::vector<AttractorSolutionT<S>> solve_complex_general(const TorusChargeT<S>& c) {
  using F = field_t<S>;
  detail::require_nonzero(c.is_zero());
  const auto inv = invariants(c);
  if (sign_of(det3(inv.R)) <= 0) throw NoAttractor("det(R) <= 0");
  if (sign_of(inv.D) <= 0) throw NoAttractor("D <= 0");

  const F s = sqrt_neg(inv.D);
  const F Mf(inv.M), Df(inv.D);
  const S lin = c.p0 * c.q0 + trace_tn(c.P, c.Q);
  const Mat3<S> base = scale(S(2), matmul(c.P, transpose(c.Q))) - scalar3(lin);
  const Mat3<F> right = detail::lift<S>(transpose(inverse3(scale(S(2), inv.R))));

  std::vector<AttractorSolutionT<S>> out;
  for (int sigma : {1, -1}) {
    const F sg{S(sigma)};
    F C = F(c.p0) + sg * Mf * s / Df;
    Mat3<F> A = matmul(detail::lift<S>(base) - scalar3(sg * s), right);
    out.push_back({C, A, sigma > 0 ? Branch::PlusGeneral : Branch::MinusGeneral});
  }
  return out;
}

/// Unique attractor with T in the Siegel upper half-space:
///   C = p0 - M sqrt(-D)/D,  T = (2PQ - (p0 q0 + tr PQ) I + sqrt(-D) I)(2R)^-1.
/// Throws AsymmetricCharge, or NoAttractor unless R > 0 and D > 0.
template <class S>
AttractorSolutionT<S> solve_complex_symmetric(const TorusChargeT<S>& c) {
  using F = field_t<S>;
  detail::require_nonzero(c.is_zero());
  if (!c.symmetric()) throw AsymmetricCharge("P and Q must be symmetric");
  const auto inv = invariants(c);
  if (!is_positive_definite(inv.R)) throw NoAttractor("R not positive definite");
  if (sign_of(inv.D) <= 0) throw NoAttractor("D <= 0");

  const F s = sqrt_neg(inv.D);
  const S lin = c.p0 * c.q0 + trace_tn(c.P, c.Q);
  const Mat3<S> base = scale(S(2), matmul(c.P, c.Q)) - scalar3(lin);
  const Mat3<F> right = detail::lift<S>(inverse3(scale(S(2), inv.R)));
  F C = F(c.p0) - F(inv.M) * s / F(inv.D);
  Mat3<F> T = matmul(detail::lift<S>(base) + scalar3(s), right);
  return {C, T, Branch::SymmetricSiegel};
}

/// Max-abs deviation of each equation: |Re C - p0|, |Re(CA) - P|,
/// |Re(C Cof A) + Q|, |Re(C det A) - q0|.
template <class S>
std::array<S, 4> residual(const TorusChargeT<S>& c, const field_t<S>& C, const Mat3<field_t<S>>& A) {
  std::array<S, 4> r{S(0), S(0), S(0), S(0)};
  r[0] = abs_real(S(re(C)) - c.p0);
  const auto cof = cofactor(A);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[1] = max_real(r[1], abs_real(S(re(C * A[i][j])) - c.P[i][j]));
      r[2] = max_real(r[2], abs_real(S(re(C * cof[i][j])) + c.Q[i][j]));
    }
  r[3] = abs_real(S(re(C * det3(A))) - c.q0);
  return r;
}

template <class S>
bool residual_zero(const std::array<S, 4>& r) {
  for (const auto& x : r)
    if (!(x == S(0))) return false;
  return true;
}

/// Kähler attractor by the sign-flip reduction: the complex solve of
/// (v0, V, U, u0) gives the same Omega, and C changes sign.
template <class S>
KahlerSolutionT<S> solve_kahler(const KahlerTorusChargeT<S>& k) {
  const TorusChargeT<S> flipped{-k.v0, -k.V, -k.U, -k.u0};
  const auto sol = solve_complex_symmetric(flipped);
  return {sol.C, sol.A};
}

template <class S>
TorusChargeT<S> as_complex_charge(const KahlerTorusChargeT<S>& k) {
  return {k.v0, k.V, k.U, k.u0};
}

struct MirrorCover {
  Rational D;                   // integral discriminant
  Mat3<Rational> scale;         // 2R
  Mat3<QuadNumber> omega_prime; // Re(Omega 2R) + (sqrt(-D)/2) I
};

/// Principally polarized cover data of a Kähler attractor with integral charge.
/// Throws std::invalid_argument on non-integral input and NoAttractor when
/// the charge has no attractor.
MirrorCover mirror_cover(const KahlerTorusCharge& k, const Mat3<QuadNumber>& omega);
MirrorCover mirror_cover(const KahlerTorusCharge& k);

/// Matrix of Y -> Cof(Y+P) - Cof(Y) - Cof(P) on row-major vec(Y); its
/// determinant is -2 (det P)^3.
MatrixQ p0_zero_matrix(const Mat3<Rational>& P);

bool is_integral(const TorusCharge& c);

}  // namespace attractor
