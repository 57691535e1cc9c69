#pragma once

// Numerical oracle for torus attractors: the Weil-Petersson pairing, the mass
// function and its minimisation over the Siegel upper half-space.

#include "attractor/matrix.hpp"
#include "attractor/torus.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace attractor {

struct MassConfig {
  double grad_tol = 1e-10;
  int max_iters = 500;
  double fd_step = 1e-6;
  int n_starts = 20;
  std::uint64_t rng_seed = 0;
  int threads = 1;

  /// Throws std::invalid_argument when a field is not positive.
  void validate() const;
};

/// i * integral of Omega ^ conj(Omega), by expanding the wedge product.
/// Throws std::domain_error when T is not in the Siegel space.
double torus_volume_pairing(const Mat3<cplx>& T);

/// Exact value coeff * sqrt(kernel) of the same pairing for T over Q(sqrt(-k)).
struct ExactSqrt {
  Rational coeff;
  long long kernel = 0;
  double value() const;
  friend bool operator==(const ExactSqrt& a, const ExactSqrt& b) {
    return a.coeff == b.coeff && a.kernel == b.kernel;
  }
};
ExactSqrt torus_volume_pairing(const Mat3<QuadNumber>& T);

/// 8 det(Im T), the closed form of the pairing.
double torus_volume_closed_form(const Mat3<cplx>& T);
ExactSqrt torus_volume_closed_form(const Mat3<QuadNumber>& T);

/// Unnormalised period q0 + sum Q_ij T_ij + sum P_ij Cof(T)_ij - p0 det T.
template <class S, class F>
F central_charge_torus(const Mat3<F>& T, const TorusChargeT<S>& c) {
  const Mat3<F> cof = cofactor(T);
  F z = F(c.q0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      z += F(c.Q[i][j]) * T[i][j];
      z += F(c.P[i][j]) * cof[i][j];
    }
  z -= F(c.p0) * det3(T);
  return z;
}

/// |Z| / sqrt(i int Omega ^ conj Omega).
double mass(const Mat3<cplx>& T, const TorusChargeF& c);

/// Twelve real coordinates on the Siegel space: the upper triangle of Re(T)
/// (00,01,02,11,12,22), then Lambda with Im(T) = Lambda Lambda^T stored as
/// (log L00, L10, log L11, L20, L21, log L22).
struct SiegelChart {
  using Coords = std::array<double, 12>;
  static Coords encode(const Mat3<cplx>& T);
  static Mat3<cplx> decode(const Coords& x);
  static Mat3<std::complex<long double>> decode_ld(const double* x);
};

/// mass^2 in chart coordinates, evaluated in long double.
long double mass_squared_chart(const TorusChargeF& c, const double* x);

struct MinimizeRun {
  int start = 0;
  Mat3<cplx> T{};
  double value = 0;      // mass^2
  double grad_norm = 0;
  int iters = 0;
  bool converged = false;
  bool zero_mass = false;  // reached the zero locus of Z
  bool escaped = false;    // drifted towards the boundary of the Siegel space
};

struct MinimizeResult {
  Mat3<cplx> T{};
  double value = 0;
  double grad_norm = 0;
  bool converged = false;
  bool attractor_found = false;  // converged with nonzero mass inside the domain
  int best_start = -1;
  std::vector<MinimizeRun> runs;  // sorted by (value, start)
};

/// Multi-start BFGS on mass^2. Starts: Re(T) uniform in [-2,2], log-diagonal of
/// Lambda uniform in [-1,1], off-diagonal uniform in [-1,1]; seeded per start.
MinimizeResult minimize(const TorusChargeF& c, const MassConfig& cfg);

/// Chart gradient of mass^2 at T (central differences with step h).
std::vector<double> mass_gradient(const TorusChargeF& c, const Mat3<cplx>& T, double h = 1e-6);

/// 12x12 Hessian of mass^2 in chart coordinates.
MatrixD numeric_hessian(const TorusChargeF& c, const Mat3<cplx>& T, double h = 1e-4);

}  // namespace attractor
