#pragma once

// Penalty-method minimisation of the E x S mass over the period domain
// {(Omega,Omega) = 0, (Omega, conj Omega) > 0} of a lattice of signature (2, m).

#include "attractor/lattice.hpp"
#include "attractor/mass.hpp"

#include <complex>
#include <vector>

namespace attractor {

struct QuadricRun {
  int start = 0;
  std::complex<double> tau;
  std::vector<std::complex<double>> omega;
  double value = 0;      // mass without the penalty term
  double constraint = 0; // |(Omega,Omega)| / (Omega, conj Omega)
  double grad_norm = 0;
  bool zero_mass = false;   // central charge vanished
  bool stationary = false;  // on the quadric with a small gradient
};

struct QuadricResult {
  std::complex<double> tau;
  std::vector<std::complex<double>> omega;
  double value = 0;
  double constraint = 0;
  bool converged = false;
  std::vector<QuadricRun> runs;  // sorted by (value, start)
};

/// Minimises |(tau u1 - u2, Omega)|^2 / (Im tau (Omega, conj Omega)) over tau in the
/// upper half-plane and Omega on the quadric, with penalty weights 10, 1e2, ..., 1e6
/// on |(Omega,Omega)|^2 / (Omega, conj Omega)^2.
/// Throws std::invalid_argument unless L has exactly two positive eigenvalues,
/// or when u1 = u2 = 0.
QuadricResult quadric_domain_minimize(const GramLattice& L, const LatticeVector& u1, const LatticeVector& u2,
                                      const MassConfig& cfg);

/// sqrt(1 - |a^H b|^2 / (|a|^2 |b|^2)): zero iff the complex lines agree.
double line_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b);

}  // namespace attractor
