#pragma once

// Point sets of attractor moduli: tau values of a rank-2 lattice and the
// symmetric torus charges of bounded height.

#include "attractor/lattice.hpp"
#include "attractor/torus.hpp"

#include <complex>
#include <vector>

namespace attractor {

struct TauPoint {
  QuadNumber tau;  // ((u1,u2) + sqrt(-D)) / u1^2
  LatticeVector u1, u2;
  long long D = 0;
};

/// tau for one pair; throws NoAttractor if the pair is not positive definite.
QuadNumber tau_of(const GramLattice& L, const LatticeVector& u1, const LatticeVector& u2);

/// All independent pairs with coordinates in [-height, height], first pair
/// kept for each distinct tau, in lexicographic pair order. primitive_only
/// skips pairs whose 2x2 minors have a common factor.
/// Throws std::invalid_argument unless L is rank 2, even and positive definite.
std::vector<TauPoint> tau_set(const GramLattice& L, int height, bool primitive_only = false, int threads = 1);

struct Box {
  double a, b, c, d;  // [a,b] x [c,d]
};

/// max over a grid x grid mesh of the box of the distance to the nearest point.
/// Throws std::invalid_argument on an empty set, c <= 0 or grid < 2.
double covering_radius(const std::vector<std::complex<double>>& pts, const Box& box, int grid);
double covering_radius(const std::vector<TauPoint>& pts, const Box& box, int grid);

struct TorusConstellationPoint {
  TorusCharge charge;
  Mat3<QuadNumber> T;
  Rational D;
  Rational detR;
};

/// Symmetric integral charges with entries in [-height, height], up to global
/// sign, with R positive definite and D > 0, together with their exact
/// attractor. limit > 0 stops after that many points.
std::vector<TorusConstellationPoint> torus_constellation(int height, std::size_t limit = 0, int threads = 1);

}  // namespace attractor
