#include "attractor/exs.hpp"

#include <cmath>

namespace attractor {

namespace {

LatticeVector flatten(const MukaiVector& v) {
  LatticeVector out{v.r};
  out.insert(out.end(), v.D.begin(), v.D.end());
  out.push_back(v.s);
  return out;
}

Rational max_abs(const Rational& acc, const Rational& x) { return max_real(acc, x.abs()); }

}  // namespace

long long mukai_pair(const GramLattice& ns, const MukaiVector& v, const MukaiVector& w) {
  return ns.pair(v.D, w.D) - v.r * w.s - w.r * v.s;
}

std::vector<std::complex<double>> ComplexEXSAttractor::omega_float() const {
  std::vector<std::complex<double>> out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(std::complex<double>(0.0, -1.0) * x.to_complex());
  return out;
}

QuadNumber ComplexEXSAttractor::omega_square(const GramLattice& L) const { return -L.pair_any(w, w); }

Rational ComplexEXSAttractor::omega_norm(const GramLattice& L) const {
  std::vector<QuadNumber> wc;
  for (const auto& x : w) wc.push_back(x.conj());
  const QuadNumber n = L.pair_any(w, wc);
  if (!n.is_rational()) throw std::logic_error("omega_norm: (w, conj w) is not real");
  return n.re();
}

ComplexEXSAttractor solve_complex_exs(const GramLattice& L, const LatticeVector& u1, const LatticeVector& u2) {
  if (u1.size() != static_cast<std::size_t>(L.rank()) || u2.size() != u1.size())
    throw std::invalid_argument("solve_complex_exs: vector length does not match lattice rank");
  if (dependent(u1, u2)) throw DependentVectors("u1 and u2 are linearly dependent");
  const long long a = L.square(u1), b = L.pair(u1, u2);
  ComplexEXSAttractor out;
  out.D = pair_discriminant(L, u1, u2);
  if (a <= 0 || out.D <= 0) throw NoAttractor("Zu1 + Zu2 is not positive definite");

  const QuadNumber s = QuadNumber::sqrt_neg(Rational(out.D));
  out.tau = (QuadNumber(b) + s) / QuadNumber(a);
  const QuadNumber tb = out.tau.conj();
  // C = -1/Im(tau) = -a/sqrt(D); C (-i) = a sqrt(-D)/D
  out.cw = QuadNumber(Rational(a, out.D)) * s;
  for (std::size_t i = 0; i < u1.size(); ++i) {
    out.w.push_back(tb * QuadNumber(u1[i]) - QuadNumber(u2[i]));
    out.c_omega.push_back(out.cw * out.w.back());
  }
  return out;
}

Rational exs_complex_residual(const ComplexEXSAttractor& a, const LatticeVector& u1, const LatticeVector& u2) {
  Rational r(0);
  for (std::size_t i = 0; i < u1.size(); ++i) {
    r = max_abs(r, a.c_omega[i].re() - Rational(u1[i]));
    r = max_abs(r, (a.tau * a.c_omega[i]).re() - Rational(u2[i]));
  }
  return r;
}

std::vector<std::complex<double>> rank2_omega(std::complex<double> c1, std::complex<double> c2,
                                              const std::vector<double>& g1, const std::vector<double>& g2) {
  if (g1.size() != g2.size()) throw std::invalid_argument("rank2_omega: length mismatch");
  const double im = std::imag(c1 * std::conj(c2));
  if (std::fabs(im) <= 1e-14 * std::abs(c1) * std::abs(c2))
    throw DegenerateCoefficients("Im(C1 conj C2) = 0");
  const std::complex<double> alpha(0.0, -1.0 / im);
  std::vector<std::complex<double>> out(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) out[i] = alpha * (std::conj(c2) * g1[i] - std::conj(c1) * g2[i]);
  return out;
}

Rational KahlerEXSAttractor::im_omega_S_square(const GramLattice& ns) const {
  long long k = 0;
  std::vector<Rational> b;
  for (const auto& x : delta.D) {
    if (x.kernel() != 0) k = x.kernel();
    b.push_back(x.im_coeff());
  }
  return Rational(k) * ns.pair_any(b, b);
}

KahlerEXSAttractor solve_kahler_exs(const GramLattice& ns, const MukaiVector& v1, const MukaiVector& v2) {
  if (v1.D.size() != static_cast<std::size_t>(ns.rank()) || v2.D.size() != v1.D.size())
    throw std::invalid_argument("solve_kahler_exs: divisor length does not match NS rank");
  if (dependent(flatten(v1), flatten(v2))) throw DependentVectors("v1 and v2 are linearly dependent");
  const long long a = mukai_pair(ns, v1, v1), b = mukai_pair(ns, v1, v2), c = mukai_pair(ns, v2, v2);
  KahlerEXSAttractor out;
  out.D = Rational(a) * Rational(c) - Rational(b) * Rational(b);
  if (a <= 0 || out.D.sign() <= 0) throw NoAttractor("Zv1 + Zv2 is not positive definite");

  const QuadNumber s = QuadNumber::sqrt_neg(out.D);
  out.omega_E = (QuadNumber(b) + s) / QuadNumber(a);
  const QuadNumber wb = out.omega_E.conj();
  const QuadNumber den = QuadNumber(v2.r) - wb * QuadNumber(v1.r);
  if (den.is_zero()) throw std::logic_error("solve_kahler_exs: r1 = r2 = 0 under positivity");
  const QuadNumber inv = den.inverse();
  auto comb = [&](long long x1, long long x2) { return (QuadNumber(x2) - wb * QuadNumber(x1)) * inv; };
  out.delta.r = comb(v1.r, v2.r);
  for (std::size_t i = 0; i < v1.D.size(); ++i) out.delta.D.push_back(comb(v1.D[i], v2.D[i]));
  out.delta.s = comb(v1.s, v2.s);
  out.C = -QuadNumber(Rational(a) / out.D) * s * den;
  return out;
}

Rational kahler_exs_residual(const KahlerEXSAttractor& a, const MukaiVector& v1, const MukaiVector& v2) {
  const QuadNumber c1 = a.C, c2 = a.C * a.omega_E;
  Rational r(0);
  auto check = [&](const QuadNumber& x, long long t1, long long t2) {
    r = max_abs(r, (c1 * x).re() - Rational(t1));
    r = max_abs(r, (c2 * x).re() - Rational(t2));
  };
  check(a.delta.r, v1.r, v2.r);
  for (std::size_t i = 0; i < v1.D.size(); ++i) check(a.delta.D[i], v1.D[i], v2.D[i]);
  check(a.delta.s, v1.s, v2.s);
  return r;
}

std::pair<QuadNumber, QuadNumber> exponential_defects(const GramLattice& ns, const MukaiVectorK& delta) {
  const QuadNumber dd = ns.pair_any(delta.D, delta.D);
  const QuadNumber self = dd - QuadNumber(2) * delta.r * delta.s;
  // delta = r e^{D/r} has degree-4 part (D,D)/(2r)
  const QuadNumber top = delta.s - dd * (QuadNumber(2) * delta.r).inverse();
  return {self, top};
}

RigidityResult kahler_rigidity(const GramLattice& ns, const std::vector<Rational>& B, const KappaSpec& kappa,
                               const LatticeVector& H) {
  if (B.size() != static_cast<std::size_t>(ns.rank()) || H.size() != B.size())
    throw std::invalid_argument("kahler_rigidity: vector length does not match NS rank");
  const long long h2 = ns.square(H);
  if (h2 <= 0) throw std::invalid_argument("kahler_rigidity: H^2 must be positive");
  RigidityResult out;
  if (!kappa.k2_rational) {
    out.rigid = false;
    out.witness = "kappa^2 is irrational: the real and imaginary parts span no proper rational sublattice";
    return out;
  }
  if (kappa.k2.sign() <= 0) throw std::invalid_argument("kahler_rigidity: kappa^2 must be positive");

  std::vector<Rational> Hq(H.begin(), H.end());
  const Rational b2 = ns.pair_any(B, B);
  const Rational bh = ns.pair_any(B, Hq);
  out.re = {Rational(1), B, (b2 - kappa.k2 * Rational(h2)) / Rational(2)};
  out.im = {Rational(0), Hq, bh};

  // k itself is rational exactly when k2 is a rational square.
  const mpq_class& q = kappa.k2.raw();
  if (mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t())) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    const Rational k(n, d);
    out.im.r *= k;
    for (auto& x : out.im.D) x *= k;
    out.im.s *= k;
    out.im_scaled = true;
  }

  auto clear = [](const MukaiVectorQ& v, mpz_class& m, MukaiVector& g) {
    m = v.r.den();
    for (const auto& x : v.D) m = lcm(m, x.den());
    m = lcm(m, v.s.den());
    const Rational mr(m, mpz_class(1));
    g.r = (v.r * mr).to_int64();
    g.D.clear();
    for (const auto& x : v.D) g.D.push_back((x * mr).to_int64());
    g.s = (v.s * mr).to_int64();
  };
  clear(out.re, out.m, out.gen1);
  clear(out.im, out.n, out.gen2);
  out.rigid = true;
  return out;
}

}  // namespace attractor
