#include "attractor/torus_inverse.hpp"

namespace attractor {

void Picard9Period::validate() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!R[i][j].is_integer() || !N[i][j].is_integer())
        throw std::invalid_argument("Picard9Period: R and N must be integral");
  if (!D.is_integer() || D.sign() <= 0) throw std::invalid_argument("Picard9Period: D must be a positive integer");
  if (!is_symmetric(R)) throw std::invalid_argument("Picard9Period: R must be symmetric");
  if (!is_positive_definite(R)) throw std::invalid_argument("Picard9Period: R must be positive definite");
  // N R^-1 symmetric  <=>  R N symmetric
  if (!is_symmetric(matmul(R, N))) throw std::invalid_argument("Picard9Period: N R^-1 must be symmetric");
}

Mat3<QuadNumber> Picard9Period::period() const {
  const auto rinv = cast3<QuadNumber>(inverse3(R));
  return matmul(cast3<QuadNumber>(N) + scalar3(QuadNumber::sqrt_neg(D)), rinv);
}

InverseCharge charge_from_period(const Picard9Period& p) {
  p.validate();
  const Rational detR = det3(p.R);
  const Rational n = (p.D + Rational(1)) * detR;
  const Rational M = Rational(2) * n * detR;
  const Mat3<Rational> S = scale(Rational(2) * n, p.N);
  const Rational p0 = detR;
  const Mat3<Rational> P =
      matmul(scale(p0, S) + scalar3(M), inverse3(scale(Rational(2) * n, p.R)));
  const Mat3<Rational> Q = scale(p0.inverse(), scale(n, p.R) - cofactor(P));
  const Rational q0 =
      (Rational(2) * n * detR - Rational(2) * det3(P) - p0 * trace(matmul(P, Q))) / (p0 * p0);
  return {{p0, P, Q, q0}, n, M};
}

ClearedCharge clear_denominators(const TorusCharge& c) {
  mpz_class k = 1;
  auto acc = [&k](const Rational& x) { k = lcm(k, x.den()); };
  acc(c.p0);
  acc(c.q0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      acc(c.P[i][j]);
      acc(c.Q[i][j]);
    }
  const Rational kr(k, mpz_class(1));
  return {k, {kr * c.p0, scale(kr, c.P), scale(kr, c.Q), kr * c.q0}};
}

}  // namespace attractor
