#include "attractor/torus.hpp"

namespace attractor {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::PlusGeneral: return "PlusGeneral";
    case Branch::MinusGeneral: return "MinusGeneral";
    case Branch::SymmetricSiegel: return "SymmetricSiegel";
  }
  return "unknown";
}

bool is_integral(const TorusCharge& c) {
  if (!c.p0.is_integer() || !c.q0.is_integer()) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!c.P[i][j].is_integer() || !c.Q[i][j].is_integer()) return false;
  return true;
}

MirrorCover mirror_cover(const KahlerTorusCharge& k, const Mat3<QuadNumber>& omega) {
  const TorusCharge c = as_complex_charge(k);
  if (!is_integral(c)) throw std::invalid_argument("mirror_cover: charge must be integral");
  const auto inv = invariants(c);
  if (inv.D.sign() <= 0) throw NoAttractor("D <= 0");
  if (!is_positive_definite(inv.R)) throw NoAttractor("R not positive definite");

  MirrorCover out;
  out.D = inv.D;
  out.scale = scale(Rational(2), inv.R);
  const Mat3<Rational> re_part = real_part(matmul(omega, cast3<QuadNumber>(out.scale)));
  const QuadNumber half = QuadNumber::sqrt_neg(inv.D) * QuadNumber(Rational(1, 2));
  out.omega_prime = cast3<QuadNumber>(re_part) + scalar3(half);
  return out;
}

MirrorCover mirror_cover(const KahlerTorusCharge& k) {
  return mirror_cover(k, solve_kahler(k).Omega);
}

MatrixQ p0_zero_matrix(const Mat3<Rational>& P) {
  MatrixQ m(9, 9);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      Mat3<Rational> e = zero3<Rational>();
      e[k][l] = Rational(1);
      const auto b = cofactor_bilinear(e, P);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(3 * i + j, 3 * k + l) = b[i][j];
    }
  return m;
}

}  // namespace attractor
