#include "attractor/constellation.hpp"
#include "attractor/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace attractor;

namespace {

const GramLattice D22({{2, 0}, {0, 2}});

bool contains(const std::vector<TauPoint>& s, const QuadNumber& t) {
  return std::any_of(s.begin(), s.end(), [&](const TauPoint& p) { return p.tau == t; });
}

}  // namespace

TEST_CASE("tau set at height 1") {
  const auto s = tau_set(D22, 1);
  CHECK(contains(s, QuadNumber::i()));
  for (const auto& p : s) {
    CHECK(p.tau == tau_of(D22, p.u1, p.u2));
    CHECK(p.tau.to_complex().imag() > 0);
  }
  // distinct values only
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) CHECK_FALSE(s[i].tau == s[j].tau);
  CHECK(tau_set(D22, 1, true).size() <= s.size());
}

TEST_CASE("translation and scaling of pairs act on tau") {
  const auto s = tau_set(D22, 2);
  for (const auto& p : s) {
    const QuadNumber t = p.tau;
    LatticeVector shifted(2), s1(2), s2(2);
    for (int k = 0; k < 2; ++k) {
      shifted[k] = p.u2[k] + p.u1[k];
      s1[k] = 2 * p.u1[k];
      s2[k] = 3 * p.u2[k];
    }
    CHECK(tau_of(D22, p.u1, shifted) == t + QuadNumber(1));
    CHECK(tau_of(D22, s1, s2) == QuadNumber(Rational(3, 2)) * t);
  }
  CHECK(dense_tau_identity_failures(D22, 3, nullptr) == 0);
}

TEST_CASE("covering radius") {
  const Box box{0, 1, 1, 2};
  CHECK(covering_radius(std::vector<std::complex<double>>{{0.5, 1.5}}, box, 41) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  const std::vector<std::complex<double>> small{{0.5, 1.5}}, big{{0.5, 1.5}, {0, 1}, {1, 2}};
  CHECK(covering_radius(big, box, 41) <= covering_radius(small, box, 41));
  const double r4 = covering_radius(tau_set(D22, 4), box, 41);
  const double r8 = covering_radius(tau_set(D22, 8), box, 41);
  CHECK(r8 < r4);
  CHECK_THROWS_AS(covering_radius(std::vector<std::complex<double>>{}, box, 41), std::invalid_argument);
  CHECK_THROWS_AS(covering_radius(small, Box{0, 1, 0, 1}, 41), std::invalid_argument);
  CHECK_THROWS_AS(covering_radius(small, box, 1), std::invalid_argument);
}

TEST_CASE("torus constellation at height 1") {
  const auto pts = torus_constellation(1);
  REQUIRE_FALSE(pts.empty());
  const TorusCharge id{Rational(1), zero3<Rational>(), identity3<Rational>(), Rational(0)};
  bool found = false;
  for (const auto& p : pts) {
    CHECK(residual_zero(residual(p.charge, solve_complex_symmetric(p.charge).C, p.T)));
    CHECK(p.D.sign() > 0);
    CHECK(p.detR.sign() > 0);
    if (p.charge == id) {
      found = true;
      CHECK(p.T == scalar3(QuadNumber::i()));
      CHECK(p.D == Rational(4));
    }
    // one representative per sign class
    CHECK(std::none_of(pts.begin(), pts.end(), [&](const auto& q) { return q.charge == -p.charge; }));
  }
  CHECK(found);
  CHECK(torus_constellation(1, 5).size() == 5);
  CHECK(torus_constellation(1, 0, 2).size() == pts.size());
}

TEST_CASE("constellation errors") {
  CHECK_THROWS_AS(tau_set(GramLattice({{2, 0}, {0, -2}}), 2), std::invalid_argument);
  CHECK_THROWS_AS(tau_set(GramLattice({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 2), std::invalid_argument);
  CHECK_THROWS_AS(tau_set(GramLattice({{1, 0}, {0, 1}}), 2), std::invalid_argument);
  CHECK_THROWS_AS(tau_of(D22, {1, 0}, {2, 0}), NoAttractor);
  CHECK_THROWS_AS(torus_constellation(0), std::invalid_argument);
}
