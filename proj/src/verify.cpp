#include "attractor/verify.hpp"

#include "attractor/amodel.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace attractor {

namespace {

constexpr std::size_t kMaxNotes = 8;

Mat3<long long> random_imat(Rng& rng, int bound, bool symmetric) {
  Mat3<long long> m = zero3<long long>();
  for (int i = 0; i < 3; ++i)
    for (int j = symmetric ? i : 0; j < 3; ++j) {
      m[i][j] = uniform_int(rng, -bound, bound);
      if (symmetric) m[j][i] = m[i][j];
    }
  return m;
}

// Sylvester's criterion on a small integer matrix.
bool pd_int(const Mat3<long long>& m) {
  return m[0][0] > 0 && m[0][0] * m[1][1] - m[0][1] * m[1][0] > 0 && det3(m) > 0;
}

TorusChargeT<long long> random_icharge(Rng& rng, int bound, bool symmetric) {
  TorusChargeT<long long> c;
  c.p0 = uniform_int(rng, -bound, bound);
  c.P = random_imat(rng, bound, symmetric);
  c.Q = random_imat(rng, bound, symmetric);
  c.q0 = uniform_int(rng, -bound, bound);
  return c;
}

std::string show(const TorusCharge& c) {
  std::ostringstream os;
  os << "p0=" << c.p0.str() << " P=[";
  for (const auto& r : c.P)
    for (const auto& x : r) os << x.str() << ' ';
  os << "] Q=[";
  for (const auto& r : c.Q)
    for (const auto& x : r) os << x.str() << ' ';
  os << "] q0=" << c.q0.str();
  return os.str();
}

bool throws_no_attractor(const std::function<void()>& f) {
  try {
    f();
  } catch (const NoAttractor&) {
    return true;
  }
  return false;
}

// ---- suites ----

void suite_rmd(SuiteResult& out, Rng& rng) {
  for (int t = 0; t < 10000; ++t) {
    TorusCharge c = random_charge(rng, 5, t % 2 == 0);
    if (t % 10 == 0) {
      // force det P = 0 by repeating a row
      c.P[2] = c.P[uniform_int(rng, 0, 1)];
    }
    const auto inv = invariants(c);
    const Rational defect = Rational(4) * det3(inv.R) - inv.M * inv.M - c.p0 * c.p0 * inv.D;
    ++out.checks;
    if (!defect.is_zero()) out.fail("4 det R - M^2 - p0^2 D = " + defect.str() + " for " + show(c));
  }
}

void suite_residuals(SuiteResult& out, Rng& rng) {
  // exact residuals on admissible symmetric charges
  for (int t = 0; t < 1000; ++t) {
    const TorusCharge c = random_admissible_charge(rng, 3);
    const auto sym = solve_complex_symmetric(c);
    ++out.checks;
    if (!residual_zero(residual(c, sym.C, sym.A))) out.fail("symmetric residual nonzero for " + show(c));
    for (const auto& g : solve_complex_general(c)) {
      ++out.checks;
      if (!residual_zero(residual(c, g.C, g.A)))
        out.fail(to_string(g.branch) + " residual nonzero for " + show(c));
    }
  }
  // existence predicates on unfiltered charges
  for (int t = 0; t < 1000; ++t) {
    const bool symmetric = t % 2 == 0;
    const TorusCharge c = random_charge(rng, 2, symmetric);
    if (c.is_zero()) continue;
    const auto inv = invariants(c);
    const bool dpos = inv.D.sign() > 0;
    const bool general_exists = det3(inv.R).sign() > 0 && dpos;
    ++out.checks;
    if (throws_no_attractor([&] { solve_complex_general(c); }) == general_exists)
      out.fail("general-branch existence mismatch for " + show(c));
    if (!symmetric) continue;
    const bool sym_exists = is_positive_definite(inv.R) && dpos;
    ++out.checks;
    if (throws_no_attractor([&] { solve_complex_symmetric(c); }) == sym_exists)
      out.fail("symmetric-branch existence mismatch for " + show(c));
  }
}

void suite_roundtrip(SuiteResult& out, Rng& rng) {
  for (int t = 0; t < 1000; ++t) {
    const Picard9Period p = random_period(rng, 3, 9);
    const InverseCharge ic = charge_from_period(p);
    const auto sol = solve_complex_symmetric(ic.charge);
    const auto inv = invariants(ic.charge);
    ++out.checks;
    if (!(sol.A == p.period())) out.fail("period not reproduced for " + show(ic.charge));
    ++out.checks;
    if (!(inv.R == scale(ic.n, p.R)) || !(inv.M == ic.M) || !(inv.D == Rational(4) * ic.n * ic.n * p.D))
      out.fail("invariants not rescaled as expected for " + show(ic.charge));
  }
}

void suite_exs(SuiteResult& out, Rng& rng) {
  for (int t = 0; t < 200; ++t) {
    const GramLattice L = random_even_pd_rank2(rng, 6);
    const auto [u1, u2] = random_pd_pair(rng, L, 4);
    const auto a = solve_complex_exs(L, u1, u2);
    ++out.checks;
    if (!a.omega_square(L).is_zero()) out.fail("(Omega,Omega) != 0");
    ++out.checks;
    if (a.omega_norm(L).sign() <= 0) out.fail("(Omega, conj Omega) <= 0");
    ++out.checks;
    if (a.tau.im_sign() <= 0) out.fail("tau not in the upper half-plane");
    ++out.checks;
    if (!exs_complex_residual(a, u1, u2).is_zero()) out.fail("complex E x S residual nonzero");
  }
  for (int t = 0; t < 200; ++t) {
    GramLattice ns;
    if (t % 2 == 0) {
      ns = GramLattice(std::vector<std::vector<long long>>{{2 * uniform_int(rng, 1, 5)}});
    } else {
      ns = random_even_hyperbolic_rank2(rng, 4);
    }
    const auto [v1, v2] = random_pd_mukai_pair(rng, ns, 3);
    const auto k = solve_kahler_exs(ns, v1, v2);
    const auto [d1, d2] = exponential_defects(ns, k.delta);
    ++out.checks;
    if (!d1.is_zero() || !d2.is_zero()) out.fail("delta is not an exponential");
    ++out.checks;
    if (k.im_omega_S_square(ns).sign() <= 0) out.fail("Im(omega_S)^2 <= 0");
    ++out.checks;
    if (!kahler_exs_residual(k, v1, v2).is_zero()) out.fail("Kähler E x S residual nonzero");
  }
}

void suite_legendrian(SuiteResult& out, Rng& rng) {
  for (int t = 0; t < 50; ++t) {
    const QuadNumber s = QuadNumber::sqrt_neg(Rational(uniform_int(rng, 1, 7)));
    Mat3<QuadNumber> w;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        w[i][j] = QuadNumber(Rational(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3))) +
                  s * QuadNumber(Rational(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3)));
    const auto m = torus_legendrian_exact(w);
    ++out.checks;
    for (const auto& x : m.data)
      if (!x.is_zero()) {
        out.fail("torus Legendrian matrix has a nonzero entry " + x.str());
        break;
      }
  }
  const auto ctx = ChernContext::quintic();
  const auto basis = quintic_basis();
  const EulerMatrix chi = euler_matrix(basis, ctx);
  for (int t = 0; t < 50; ++t) {
    const QuadNumber tau = QuadNumber(Rational(uniform_int(rng, -6, 6), uniform_int(rng, 1, 4))) +
                           QuadNumber::i() * QuadNumber(Rational(uniform_int(rng, 1, 9), uniform_int(rng, 1, 4)));
    const Rational lam(uniform_int(rng, -5, 5), uniform_int(rng, 1, 7));
    std::vector<QuadNumber> dz;
    for (const auto& f : basis) dz.push_back(classical_charge_exact_dtau(tau, f, ctx, lam));
    const auto m = legendrian_residual({dz}, chi);
    ++out.checks;
    if (!m(0, 0).is_zero()) out.fail("quintic Legendrian entry " + m(0, 0).str());
  }
}

void suite_density(SuiteResult& out, int threads) {
  const GramLattice L({{2, 0}, {0, 2}});
  long checked = 0;
  const long bad = dense_tau_identity_failures(L, 6, &checked);
  out.checks += checked;
  if (bad > 0) out.fail(std::to_string(bad) + " pairs violate the tau identities");
  const Box box{0.0, 1.0, 1.0, 2.0};
  double prev = INFINITY;
  for (int h : {4, 8, 16}) {
    const double r = covering_radius(tau_set(L, h, false, threads), box, 41);
    out.notes.push_back("covering radius at height " + std::to_string(h) + ": " + std::to_string(r));
    ++out.checks;
    if (!(r < prev)) out.fail("covering radius did not decrease at height " + std::to_string(h));
    prev = r;
  }
}

}  // namespace

void SuiteResult::fail(const std::string& what) {
  pass = false;
  ++failures;
  if (notes.size() < kMaxNotes) notes.push_back(what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rmd", "residuals", "roundtrip", "exs", "legendrian", "density"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int threads) {
  SuiteResult out;
  out.name = name;
  Rng rng(seed);
  const auto t0 = std::chrono::steady_clock::now();
  if (name == "rmd") {
    suite_rmd(out, rng);
  } else if (name == "residuals") {
    suite_residuals(out, rng);
  } else if (name == "roundtrip") {
    suite_roundtrip(out, rng);
  } else if (name == "exs") {
    suite_exs(out, rng);
  } else if (name == "legendrian") {
    suite_legendrian(out, rng);
  } else if (name == "density") {
    suite_density(out, threads);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

TorusCharge random_charge(Rng& rng, int bound, bool symmetric) {
  return cast_charge<Rational>(random_icharge(rng, bound, symmetric));
}

TorusCharge random_admissible_charge(Rng& rng, int bound) {
  while (true) {
    const auto c = random_icharge(rng, bound, true);
    const auto inv = invariants(c);
    if (inv.D > 0 && pd_int(inv.R)) return cast_charge<Rational>(c);
  }
}

Picard9Period random_period(Rng& rng, int bound, int max_D) {
  Mat3<long long> R;
  do {
    R = random_imat(rng, bound, true);
  } while (!pd_int(R));
  // R N symmetric: three linear conditions on N, sampled by rejection
  Mat3<long long> N;
  do {
    N = random_imat(rng, bound, false);
  } while (!is_symmetric(matmul(R, N)));
  Picard9Period p;
  p.R = cast3<Rational>(R);
  p.N = cast3<Rational>(N);
  p.D = Rational(uniform_int(rng, 1, max_D));
  return p;
}

GramLattice random_even_pd_rank2(Rng& rng, int bound) {
  while (true) {
    const long long a = 2 * uniform_int(rng, 1, bound / 2 > 0 ? bound / 2 : 1);
    const long long c = 2 * uniform_int(rng, 1, bound / 2 > 0 ? bound / 2 : 1);
    const long long b = uniform_int(rng, -bound, bound);
    if (a * c - b * b > 0) return GramLattice({{a, b}, {b, c}});
  }
}

GramLattice random_even_hyperbolic_rank2(Rng& rng, int bound) {
  const int half = bound / 2 > 0 ? bound / 2 : 1;
  while (true) {
    const long long a = 2 * uniform_int(rng, -half, half);
    const long long c = 2 * uniform_int(rng, -half, half);
    const long long b = uniform_int(rng, -bound, bound);
    if (a * c - b * b < 0) return GramLattice({{a, b}, {b, c}});
  }
}

std::pair<LatticeVector, LatticeVector> random_pd_pair(Rng& rng, const GramLattice& L, int bound) {
  while (true) {
    LatticeVector u1(L.rank()), u2(L.rank());
    for (auto& x : u1) x = uniform_int(rng, -bound, bound);
    for (auto& x : u2) x = uniform_int(rng, -bound, bound);
    if (dependent(u1, u2)) continue;
    if (L.square(u1) > 0 && pair_discriminant(L, u1, u2) > 0) return {u1, u2};
  }
}

std::pair<MukaiVector, MukaiVector> random_pd_mukai_pair(Rng& rng, const GramLattice& ns, int bound) {
  auto draw = [&] {
    MukaiVector v;
    v.r = uniform_int(rng, -bound, bound);
    v.D.resize(ns.rank());
    for (auto& x : v.D) x = uniform_int(rng, -bound, bound);
    v.s = uniform_int(rng, -bound, bound);
    return v;
  };
  while (true) {
    const MukaiVector v1 = draw(), v2 = draw();
    const long long a = mukai_pair(ns, v1, v1), b = mukai_pair(ns, v1, v2), c = mukai_pair(ns, v2, v2);
    if (a > 0 && a * c - b * b > 0) return {v1, v2};
  }
}

long dense_tau_identity_failures(const GramLattice& L, int height, long* checked) {
  long bad = 0, n = 0;
  auto scaled = [](const LatticeVector& u, long long k) {
    LatticeVector v(u);
    for (auto& x : v) x *= k;
    return v;
  };
  for (long long x1 = -height; x1 <= height; ++x1)
    for (long long y1 = -height; y1 <= height; ++y1)
      for (long long x2 = -height; x2 <= height; ++x2)
        for (long long y2 = -height; y2 <= height; ++y2) {
          const LatticeVector u1{x1, y1}, u2{x2, y2};
          if (dependent(u1, u2)) continue;
          const QuadNumber tau = tau_of(L, u1, u2);
          bool ok = true;
          for (long long k : {1, 2, 3})
            for (long long l : {1, 2, 5})
              ok = ok && tau_of(L, scaled(u1, k), scaled(u2, l)) == QuadNumber(Rational(l, k)) * tau;
          for (long long k : {-2, -1, 1, 3}) {
            LatticeVector v{k * x1 + x2, k * y1 + y2};
            ok = ok && tau_of(L, u1, v) == QuadNumber(k) + tau;
          }
          ++n;
          if (!ok) ++bad;
        }
  if (checked) *checked = n;
  return bad;
}

}  // namespace attractor
