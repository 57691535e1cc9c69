#pragma once

#include "attractor/torus.hpp"

namespace attractor {

/// Period matrix T = N R^-1 + sqrt(-D) R^-1 with R integral symmetric positive
/// definite, D > 0 and N integral with N R^-1 symmetric.
struct Picard9Period {
  Mat3<Rational> R = identity3<Rational>();
  Rational D{1};
  Mat3<Rational> N = zero3<Rational>();

  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;
  Mat3<QuadNumber> period() const;
};

struct InverseCharge {
  TorusCharge charge;
  Rational n;  // (D + 1) det R
  Rational M;  // 2 n det R
};

/// Rational charge whose symmetric attractor is p.period(), with
/// n = (D+1) det R, M = 2 n det R, S = 2 n N, p0 = det R,
/// P = (p0 S + M I)(2 n R)^-1, Q = (nR - Cof P)/p0,
/// q0 = (2 n det R - 2 det P - p0 tr(PQ))/p0^2.
InverseCharge charge_from_period(const Picard9Period& p);

struct ClearedCharge {
  mpz_class k;
  TorusCharge charge;
};

/// Multiply through by the lcm of every denominator.
ClearedCharge clear_denominators(const TorusCharge& c);

}  // namespace attractor
