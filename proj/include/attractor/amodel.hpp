#pragma once

// A-model side: the bilinear form b built from an Euler matrix, the
// Weil-Petersson potential K^A, HRR pairings on the quintic and the quantum
// central charge with an external Gromov-Witten table.

#include "attractor/mat3.hpp"
#include "attractor/matrix.hpp"
#include "attractor/torus.hpp"

#include <array>
#include <complex>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace attractor {

using EulerMatrix = MatrixQ;
using GWTable = std::map<int, Rational>;

/// sum chi^{ij} Z1_i Z2_j with (chi^{ij}) the exact inverse of chi.
/// Throws std::domain_error for singular chi, std::invalid_argument on size mismatch.
cplx bform(const std::vector<cplx>& z1, const std::vector<cplx>& z2, const EulerMatrix& chi);
QuadNumber bform(const std::vector<QuadNumber>& z1, const std::vector<QuadNumber>& z2, const EulerMatrix& chi);

/// -log(i^-n b(Z, conj Z)). Throws std::domain_error when that number is not positive.
double a_potential(const std::vector<cplx>& z, const EulerMatrix& chi, int n);

/// Coefficients of H^k, k = 0..dim, in (1+H)^(n+1) / (1+dH) for a degree d
/// hypersurface in P^n (dim = n - 1).
std::vector<Rational> hypersurface_chern(int n, int d);

/// Chern character as coefficients of 1, H, H^2, H^3.
struct ChernData {
  std::array<Rational, 4> ch{Rational(0), Rational(0), Rational(0), Rational(0)};
  ChernData dual() const;  // ch(E^vee): odd degrees change sign
};

/// Threefold with c1 = 0: H^3 = h3, c2 = c2 H^2, c3 = c3 H^3.
struct ChernContext {
  Rational h3{5};
  Rational c2{10};
  Rational c3{-40};
  static ChernContext quintic();
};

/// chi(E,F) = int ch(E^vee) ch(F) Td with Td = 1 + c2/12.
Rational euler_pairing(const ChernData& e, const ChernData& f, const ChernContext& ctx);

/// Basis 1, H, H^2, pt = H^3/5 of the numerical Grothendieck group.
std::vector<ChernData> quintic_basis();
EulerMatrix euler_matrix(const std::vector<ChernData>& basis, const ChernContext& ctx);

/// -zeta(3)/(2 pi)^3.
double lambda_quintic();

/// Classical charge -int e^{-tau H} v_X(F) as coefficients a_0..a_3 of tau^k;
/// each coefficient is x + i lam y, returned as the pair (x, y).
std::array<std::pair<Rational, Rational>, 4> classical_charge_coefficients(const ChernData& f,
                                                                          const ChernContext& ctx);

/// Exact classical charge over Q(i) with a rational stand-in for lambda.
QuadNumber classical_charge_exact(const QuadNumber& tau, const ChernData& f, const ChernContext& ctx,
                                  const Rational& lam);
/// d/dtau of the exact classical charge.
QuadNumber classical_charge_exact_dtau(const QuadNumber& tau, const ChernData& f, const ChernContext& ctx,
                                       const Rational& lam);

/// Quantum central charge with q = exp(2 pi i tau). Throws std::domain_error if Im tau <= 0.
cplx quintic_central_charge(cplx tau, const ChernData& f, const GWTable& gw);
double quintic_a_potential(cplx tau, const GWTable& gw);

/// CSV with header "d,N_d"; N_d an integer or "p/q". Throws std::runtime_error.
GWTable load_gw_table(std::istream& in);
GWTable load_gw_table_file(const std::string& path);

/// Elliptic curve over the basis (O_X, O_p).
EulerMatrix elliptic_euler_matrix();
std::vector<cplx> elliptic_charge(cplx tau);

/// b(d_i Z, d_j Z) over the supplied derivative vectors.
MatrixN<QuadNumber> legendrian_residual(const std::vector<std::vector<QuadNumber>>& dz, const EulerMatrix& chi);
MatrixN<cplx> legendrian_residual(const std::vector<std::vector<cplx>>& dz, const EulerMatrix& chi);

/// max_j |chi(F, F_j) - Re(C Z(F_j))|.
Rational kahler_attractor_residual(const std::vector<Rational>& f, const EulerMatrix& chi, const QuadNumber& C,
                                   const std::vector<QuadNumber>& z);
double kahler_attractor_residual(const std::vector<double>& f, const EulerMatrix& chi, cplx C,
                                 const std::vector<cplx>& z);

// Torus family over the 20-dimensional lattice
// (delta_0, delta_ij row-major, eps^ij row-major, eps^0).

/// Mukai pairing: <delta_0,eps^0> = <delta_ij,eps^ij> = 1, skew.
EulerMatrix torus_mukai_matrix();

/// e^omega = delta_0 + sum w^ij delta_ij - sum Cof(w)_ij eps^ij + det(w) eps^0.
template <class F>
std::vector<F> torus_exp(const Mat3<F>& w) {
  std::vector<F> v(20, F(0));
  v[0] = F(1);
  const auto cof = cofactor(w);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      v[1 + 3 * i + j] = w[i][j];
      v[10 + 3 * i + j] = -cof[i][j];
    }
  v[19] = det3(w);
  return v;
}

/// Derivative of e^omega along delta_kl.
template <class F>
std::vector<F> torus_exp_derivative(const Mat3<F>& w, int k, int l) {
  std::vector<F> v(20, F(0));
  Mat3<F> e = zero3<F>();
  e[k][l] = F(1);
  v[1 + 3 * k + l] = F(1);
  const auto dc = cofactor_bilinear(e, w);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[10 + 3 * i + j] = -dc[i][j];
  v[19] = cofactor(w)[k][l];
  return v;
}

/// Z(F_j) = -<x, e_j> for the Mukai pairing above.
template <class F>
std::vector<F> torus_charge_from(const std::vector<F>& x) {
  const EulerMatrix J = torus_mukai_matrix();
  std::vector<F> z(20, F(0));
  for (std::size_t j = 0; j < 20; ++j)
    for (std::size_t i = 0; i < 20; ++i)
      if (!J(i, j).is_zero()) z[j] -= x[i] * F(J(i, j).to_int64());
  return z;
}

/// Lattice vector v_Y(F) of a Kähler torus charge.
std::vector<Rational> torus_kahler_vector(const KahlerTorusCharge& k);

/// 9x9 Legendrian matrix of the classical torus family at omega (exact).
MatrixN<QuadNumber> torus_legendrian_exact(const Mat3<QuadNumber>& w);

}  // namespace attractor
