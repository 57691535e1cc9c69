#pragma once

// Randomised invariant suites shared by the CLI and the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "attractor/constellation.hpp"
#include "attractor/exs.hpp"
#include "attractor/torus.hpp"
#include "attractor/torus_inverse.hpp"

namespace attractor {

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;  // first few failures, then summary lines
  double seconds = 0;

  void fail(const std::string& what);
};

/// rmd, residuals, roundtrip, exs, legendrian, density.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int threads = 1);

// Random generators used by the suites (also handy in tests).
using Rng = std::mt19937_64;

long long uniform_int(Rng& rng, long long lo, long long hi);
TorusCharge random_charge(Rng& rng, int bound, bool symmetric);
/// Symmetric charge with R positive definite and D > 0 (rejection sampling).
TorusCharge random_admissible_charge(Rng& rng, int bound);
/// (R, D, N) with R positive definite, N R^-1 symmetric.
Picard9Period random_period(Rng& rng, int bound, int max_D);
/// Even positive-definite rank-2 Gram matrix with entries in [-bound, bound].
GramLattice random_even_pd_rank2(Rng& rng, int bound);
/// Even rank-2 lattice of signature (1,1), as a Neron-Severi lattice must be.
GramLattice random_even_hyperbolic_rank2(Rng& rng, int bound);
/// Independent pair spanning a positive-definite plane of L.
std::pair<LatticeVector, LatticeVector> random_pd_pair(Rng& rng, const GramLattice& L, int bound);
/// Mukai pair spanning a positive-definite plane of H^0 + NS + H^4.
std::pair<MukaiVector, MukaiVector> random_pd_mukai_pair(Rng& rng, const GramLattice& ns, int bound);

/// Both identities of the dense-tau lemma on every independent pair of height <= h;
/// returns the number of failing pairs.
long dense_tau_identity_failures(const GramLattice& L, int height, long* checked = nullptr);

}  // namespace attractor
