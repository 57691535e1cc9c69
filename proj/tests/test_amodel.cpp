#include "attractor/amodel.hpp"
#include "attractor/verify.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace attractor;

#ifndef ATTRACTOR_DATA_DIR
#define ATTRACTOR_DATA_DIR "data"
#endif

namespace {

const cplx I1(0.0, 1.0);
const QuadNumber i_ = QuadNumber::i();

ChernData chern(Rational a, Rational b, Rational c, Rational d) {
  ChernData f;
  f.ch = {a, b, c, d};
  return f;
}

double quintic_ratio(cplx tau, const GWTable& gw) {
  const double y = tau.imag();
  return std::exp(-quintic_a_potential(tau, gw)) / (20.0 / 3.0 * y * y * y);
}

}  // namespace

TEST_CASE("elliptic bilinear form") {
  const EulerMatrix chi = elliptic_euler_matrix();
  Rng rng(51);
  std::uniform_real_distribution<double> u(-3, 3), v(0.1, 4);
  for (int t = 0; t < 100; ++t) {
    const cplx tau(u(rng), v(rng));
    const auto z = elliptic_charge(tau);
    const std::vector<cplx> zc{std::conj(z[0]), std::conj(z[1])};
    CHECK(std::abs(bform(z, zc, chi) - 2.0 * I1 * tau.imag()) < 1e-12);
    CHECK(std::abs(bform(z, z, chi)) < 1e-15);
    CHECK(a_potential(z, chi, 1) == doctest::Approx(-std::log(2 * tau.imag())).epsilon(1e-12));
  }
  CHECK(a_potential(elliptic_charge(I1), chi, 1) == doctest::Approx(-std::log(2.0)));
  CHECK_THROWS_AS(a_potential(elliptic_charge(-I1), chi, 1), std::domain_error);
  CHECK_THROWS_AS(bform(std::vector<cplx>{1.0}, std::vector<cplx>{1.0}, chi), std::invalid_argument);
  CHECK_THROWS_AS(bform(std::vector<cplx>{1.0}, std::vector<cplx>{1.0}, EulerMatrix(1, 1)), std::domain_error);
}

TEST_CASE("bilinear form does not depend on the basis") {
  // new basis e' = g e; Z' = g Z and chi' = g chi g^T
  const EulerMatrix chi = elliptic_euler_matrix();
  const long long g[2][2] = {{2, 1}, {1, 1}};
  EulerMatrix gm(2, 2), gt(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      gm(i, j) = Rational(g[i][j]);
      gt(j, i) = Rational(g[i][j]);
    }
  const EulerMatrix chi2 = gm * chi * gt;
  const cplx tau(0.3, 1.2), sig(-1.0, 0.5);
  const auto z = elliptic_charge(tau), w = elliptic_charge(sig);
  auto mv = [&](const std::vector<cplx>& x) {
    return std::vector<cplx>{2.0 * x[0] + x[1], x[0] + x[1]};
  };
  CHECK(std::abs(bform(mv(z), mv(w), chi2) - bform(z, w, chi)) < 1e-12);
}

TEST_CASE("hypersurface Chern classes") {
  auto c = hypersurface_chern(4, 5);
  CHECK(c[1] == Rational(0));
  CHECK(c[2] == Rational(10));
  CHECK(c[3] == Rational(-40));
  CHECK(hypersurface_chern(3, 4)[2] == Rational(6));
  CHECK(hypersurface_chern(2, 3)[1] == Rational(0));
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 8; ++d) CHECK(hypersurface_chern(n, d) == oracle::hypersurface_chern(n, d));
  CHECK_THROWS_AS(hypersurface_chern(1, 3), std::invalid_argument);
}

TEST_CASE("Euler pairing on the quintic") {
  const auto ctx = ChernContext::quintic();
  const auto b = quintic_basis();
  CHECK(euler_pairing(b[0], b[0], ctx) == Rational(0));
  CHECK(euler_pairing(b[0], b[3], ctx) == Rational(1));
  // chi(O(1)) = h^0(O(1)) = 5
  const ChernData oh = chern(Rational(1), Rational(1), Rational(1, 2), Rational(1, 6));
  CHECK(euler_pairing(b[0], oh, ctx) == Rational(5));
  const EulerMatrix chi = euler_matrix(b, ctx);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(chi(i, j) == -chi(j, i));
  CHECK_FALSE(determinant(chi).is_zero());
}

TEST_CASE("quintic central charge") {
  const auto b = quintic_basis();
  const GWTable none;
  const GWTable sample = load_gw_table_file(std::string(ATTRACTOR_DATA_DIR) + "/gw_quintic_sample.csv");
  REQUIRE(sample.size() == 3);
  CHECK(sample.at(1) == Rational(2875));
  const cplx tau(0.2, 1.3);
  CHECK(std::abs(quintic_central_charge(tau, b[3], none) + 1.0) < 1e-15);
  CHECK(std::abs(quintic_central_charge(tau, b[3], sample) + 1.0) < 1e-15);
  // classical part of O
  const auto a = classical_charge_coefficients(b[0], ChernContext::quintic());
  cplx z = 0.0;
  for (int k = 0; k < 4; ++k) z += cplx(a[k].first.to_double(), lambda_quintic() * a[k].second.to_double()) * std::pow(tau, k);
  CHECK(std::abs(quintic_central_charge(tau, b[0], none) - z) < 1e-12);
  CHECK(std::abs(z - (5.0 / 6.0 * tau * tau * tau + 25.0 / 12.0 * tau + cplx(0, 200.0 * lambda_quintic()))) < 1e-12);
  CHECK_THROWS_AS(quintic_central_charge(-I1, b[0], none), std::domain_error);
  CHECK(lambda_quintic() == doctest::Approx(-0.0048448).epsilon(1e-4));
}

TEST_CASE("quintic potential approaches the large volume limit") {
  const GWTable sample = load_gw_table_file(std::string(ATTRACTOR_DATA_DIR) + "/gw_quintic_sample.csv");
  CHECK(std::abs(quintic_ratio(cplx(0.1, 50.0), GWTable{}) - 1.0) < 1e-4);
  CHECK(std::abs(quintic_ratio(cplx(0.1, 50.0), sample) - 1.0) < 1e-4);
  CHECK(std::abs(quintic_ratio(cplx(0.0, 200.0), sample) - 1.0) < std::abs(quintic_ratio(cplx(0.0, 50.0), sample) - 1.0));
}

TEST_CASE("GW table parsing") {
  std::istringstream ok("d,N_d\n# comment\n1, 2875\n2,1/2\n");
  const auto t = load_gw_table(ok);
  CHECK(t.at(2) == Rational(1, 2));
  for (const char* bad : {"", "1,2\n", "d,N_d\n1\n", "d,N_d\n1,x\n", "d,N_d\n0,1\n", "d,N_d\n1,1\n1,2\n", "d,N_d\n1.5,3\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(load_gw_table(in), std::runtime_error);
  }
  CHECK_THROWS_AS(load_gw_table_file("/nonexistent/table.csv"), std::runtime_error);
}

TEST_CASE("Legendrian condition on classical families") {
  // torus: 9 x 9 matrix of b(d_i Z, d_j Z)
  for (const auto& w : {scalar3(i_), scalar3(QuadNumber(1) + QuadNumber::sqrt_neg(Rational(3)))}) {
    const auto m = torus_legendrian_exact(w);
    for (const auto& x : m.data) CHECK(x.is_zero());
  }
  // elliptic curve: dZ/dtau = (1, 0)
  const auto e = legendrian_residual(std::vector<std::vector<cplx>>{{1.0, 0.0}}, elliptic_euler_matrix());
  CHECK(std::abs(e(0, 0)) == 0.0);
  // quintic with a rational stand-in for lambda
  const auto ctx = ChernContext::quintic();
  const auto basis = quintic_basis();
  const EulerMatrix chi = euler_matrix(basis, ctx);
  const QuadNumber tau = QuadNumber(Rational(1, 3)) + QuadNumber(2) * i_;
  std::vector<QuadNumber> dz;
  for (const auto& f : basis) dz.push_back(classical_charge_exact_dtau(tau, f, ctx, Rational(-3, 7)));
  CHECK(legendrian_residual({dz}, chi)(0, 0).is_zero());
  // transversality: Z is also isotropic against its derivative
  std::vector<QuadNumber> z;
  for (const auto& f : basis) z.push_back(classical_charge_exact(tau, f, ctx, Rational(-3, 7)));
  CHECK(bform(z, dz, chi).is_zero());
  // a generic vector is not
  std::vector<QuadNumber> e0(4, QuadNumber(0));
  e0[3] = QuadNumber(1);
  CHECK_FALSE(bform(e0, dz, chi).is_zero());
}

TEST_CASE("Kähler attractor residual") {
  const KahlerTorusCharge k{Rational(1), scalar3(Rational(0)), scalar3(Rational(1)), Rational(0)};
  const auto om = solve_kahler(k);
  const auto z = torus_charge_from(torus_exp(om.Omega));
  const EulerMatrix J = torus_mukai_matrix();
  auto f = torus_kahler_vector(k);
  CHECK(kahler_attractor_residual(f, J, om.C, z).is_zero());
  f[0] += Rational(1);
  CHECK(kahler_attractor_residual(f, J, om.C, z).sign() > 0);

  auto f3 = torus_kahler_vector(k);
  for (auto& x : f3) x *= Rational(3);
  CHECK(kahler_attractor_residual(f3, J, QuadNumber(3) * om.C, z).is_zero());

  std::vector<double> fd;
  for (const auto& x : torus_kahler_vector(k)) fd.push_back(x.to_double());
  std::vector<cplx> zd;
  for (const auto& x : z) zd.push_back(x.to_complex());
  CHECK(kahler_attractor_residual(fd, J, om.C.to_complex(), zd) < 1e-12);
  CHECK_THROWS_AS(kahler_attractor_residual(std::vector<double>{1.0}, J, om.C.to_complex(), zd), std::invalid_argument);
}
