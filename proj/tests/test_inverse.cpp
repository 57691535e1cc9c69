#include "attractor/mass.hpp"
#include "attractor/torus_inverse.hpp"
#include "attractor/verify.hpp"

#include <doctest.h>

using namespace attractor;

namespace {

TorusCharge scalar_charge(Rational p0, long long p, long long q, long long q0) {
  return {p0, scalar3(Rational(p)), scalar3(Rational(q)), Rational(q0)};
}

Picard9Period period(long long D, long long nscale) {
  Picard9Period p;
  p.R = identity3<Rational>();
  p.D = Rational(D);
  p.N = scalar3(Rational(nscale));
  return p;
}

const QuadNumber i_ = QuadNumber::i();

}  // namespace

TEST_CASE("charge from period examples") {
  auto ic = charge_from_period(period(1, 0));
  CHECK(ic.charge == scalar_charge(Rational(1), 1, 1, -1));
  CHECK(solve_complex_symmetric(ic.charge).A == scalar3(i_));
  CHECK(invariants(ic.charge).D == Rational(16));

  ic = charge_from_period(period(4, 0));
  CHECK(ic.charge == scalar_charge(Rational(1), 1, 4, -4));
  CHECK(solve_complex_symmetric(ic.charge).A == scalar3(QuadNumber(2) * i_));
  CHECK(invariants(ic.charge).D == Rational(400));

  ic = charge_from_period(period(1, 1));
  CHECK(ic.charge == scalar_charge(Rational(1), 2, -2, 0));
  CHECK(solve_complex_symmetric(ic.charge).A == scalar3(QuadNumber(1) + i_));
  CHECK(invariants(ic.charge).D == Rational(16));
}

TEST_CASE("period validation") {
  Picard9Period p = period(1, 0);
  p.D = Rational(0);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = period(1, 0);
  p.R[0][0] = Rational(-1);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = period(1, 0);
  p.R[0][0] = Rational(2);
  p.N[0][1] = Rational(1);  // R N not symmetric
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("clearing denominators") {
  const TorusCharge integral = scalar_charge(Rational(1), 1, 1, -1);
  auto cl = clear_denominators(integral);
  CHECK(cl.k == 1);
  CHECK(cl.charge == integral);

  cl = clear_denominators(scalar_charge(Rational(1, 2), 1, 1, -1));
  CHECK(cl.k == 2);
  CHECK(cl.charge == scalar_charge(Rational(1), 2, 2, -2));
}

TEST_CASE("round trip through random periods, before and after clearing") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const Picard9Period p = random_period(rng, 3, 9);
    const InverseCharge ic = charge_from_period(p);
    const auto inv = invariants(ic.charge);
    REQUIRE(solve_complex_symmetric(ic.charge).A == p.period());
    CHECK(inv.R == scale(ic.n, p.R));
    CHECK(inv.M == ic.M);
    CHECK(inv.D == Rational(4) * ic.n * ic.n * p.D);
    const auto cl = clear_denominators(ic.charge);
    CHECK(is_integral(cl.charge));
    CHECK(solve_complex_symmetric(cl.charge).A == p.period());
  }
}

TEST_CASE("clearing scales the mass by k") {
  const auto ic = charge_from_period(period(2, 1));
  const auto cl = clear_denominators(ic.charge);
  const auto T = to_complex(solve_complex_symmetric(ic.charge).A);
  const double m1 = mass(T, to_float(ic.charge)), mk = mass(T, to_float(cl.charge));
  CHECK(mk == doctest::Approx(cl.k.get_d() * m1).epsilon(1e-12));
}
