#pragma once

// Attractors on X = E x S with S a K3 surface.

#include "attractor/errors.hpp"
#include "attractor/lattice.hpp"
#include "attractor/quad_number.hpp"
#include "attractor/scalar.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace attractor {

/// Class (r, D, s) in H^0 + NS(S) + H^4 with coefficients in S.
template <class S>
struct MukaiVectorT {
  S r{0};
  std::vector<S> D;
  S s{0};

  friend bool operator==(const MukaiVectorT& a, const MukaiVectorT& b) {
    return a.r == b.r && a.D == b.D && a.s == b.s;
  }
};

using MukaiVector = MukaiVectorT<long long>;
using MukaiVectorQ = MukaiVectorT<Rational>;
using MukaiVectorK = MukaiVectorT<QuadNumber>;

/// <(r,D,s),(r',D',s')> = (D,D') - r s' - r' s.
long long mukai_pair(const GramLattice& ns, const MukaiVector& v, const MukaiVector& w);

template <class S>
S mukai_pair_any(const GramLattice& ns, const MukaiVectorT<S>& v, const MukaiVectorT<S>& w) {
  return ns.pair_any(v.D, w.D) - v.r * w.s - w.r * v.s;
}

template <class T, class S>
MukaiVectorT<T> cast_mukai(const MukaiVectorT<S>& v) {
  MukaiVectorT<T> out{T(v.r), {}, T(v.s)};
  for (const auto& x : v.D) out.D.push_back(T(x));
  return out;
}

struct ComplexEXSAttractor {
  long long D = 0;                  // u1^2 u2^2 - (u1,u2)^2
  QuadNumber tau;                   // ((u1,u2) + sqrt(-D)) / u1^2
  std::vector<QuadNumber> w;        // conj(tau) u1 - u2, so Omega_S = -i w
  QuadNumber cw;                    // C Omega_S = cw * w for C = -1 / Im(tau)
  std::vector<QuadNumber> c_omega;  // C * Omega_S, lies in Q(sqrt(-D))

  /// Omega_S = -i w as floating coordinates.
  std::vector<std::complex<double>> omega_float() const;
  /// (Omega_S, Omega_S) = -(w, w); exact.
  QuadNumber omega_square(const GramLattice& L) const;
  /// (Omega_S, conj Omega_S) = (w, conj w); exact and rational.
  Rational omega_norm(const GramLattice& L) const;
};

/// Throws DependentVectors, or NoAttractor when Zu1 + Zu2 is not positive definite.
ComplexEXSAttractor solve_complex_exs(const GramLattice& L, const LatticeVector& u1,
                                      const LatticeVector& u2);

/// Max-abs deviation of Re(C Omega_S) = u1 and Re(C tau Omega_S) = u2 (exact).
Rational exs_complex_residual(const ComplexEXSAttractor& a, const LatticeVector& u1,
                              const LatticeVector& u2);

/// Omega with Re(C1 Omega) = g1 and Re(C2 Omega) = g2:
///   Omega = -i (conj(C2) g1 - conj(C1) g2) / Im(C1 conj C2).
std::vector<std::complex<double>> rank2_omega(std::complex<double> c1, std::complex<double> c2,
                                              const std::vector<double>& g1,
                                              const std::vector<double>& g2);

struct KahlerEXSAttractor {
  Rational D;             // v1^2 v2^2 - <v1,v2>^2
  QuadNumber omega_E;     // (<v1,v2> + sqrt(-D)) / v1^2
  MukaiVectorK delta;     // (v2 - conj(omega_E) v1) / (r2 - conj(omega_E) r1)
  QuadNumber C;           // Re(C delta) = v1, Re(C omega_E delta) = v2

  const std::vector<QuadNumber>& omega_S() const { return delta.D; }
  /// Im(omega_S)^2 as an exact rational.
  Rational im_omega_S_square(const GramLattice& ns) const;
};

/// Throws DependentVectors, or NoAttractor when Zv1 + Zv2 is not positive definite.
KahlerEXSAttractor solve_kahler_exs(const GramLattice& ns, const MukaiVector& v1, const MukaiVector& v2);

/// Max-abs deviation of the Kähler attractor equations in coordinates (exact).
Rational kahler_exs_residual(const KahlerEXSAttractor& a, const MukaiVector& v1, const MukaiVector& v2);

/// <delta,delta> and deg4(delta) - deg2(delta)^2/2; both vanish when delta = e^omega_S.
std::pair<QuadNumber, QuadNumber> exponential_defects(const GramLattice& ns, const MukaiVectorK& delta);

/// kappa = k H with k^2 = k2. k2_rational = false models an irrational square.
struct KappaSpec {
  Rational k2{1};
  bool k2_rational = true;
};

struct RigidityResult {
  bool rigid = false;
  std::string witness;       // reason when not rigid
  MukaiVectorQ re;           // (1, B, (B^2 - kappa^2)/2)
  MukaiVectorQ im;           // (0, H, (B,H)), times k when k is rational
  bool im_scaled = false;    // true when im already carries the factor k
  mpz_class m = 1;           // least m with m re integral
  mpz_class n = 1;           // least n with n im integral
  MukaiVector gen1;          // m re
  MukaiVector gen2;          // n im
};

/// Rigidity of B + i kappa on NS(S): e^{B + i kappa} lies in the complexification
/// of a rank-2 integral lattice iff B is rational and kappa^2 is rational.
RigidityResult kahler_rigidity(const GramLattice& ns, const std::vector<Rational>& B, const KappaSpec& kappa,
                               const LatticeVector& H);

}  // namespace attractor
