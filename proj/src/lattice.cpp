#include "attractor/lattice.hpp"

namespace attractor {

GramLattice::GramLattice(std::vector<std::vector<long long>> gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw std::invalid_argument("GramLattice: empty gram matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("GramLattice: gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("GramLattice: gram matrix is not symmetric");
    if (gram_[i][i] % 2 != 0) even_ = false;
  }
}

long long GramLattice::pair(const LatticeVector& u, const LatticeVector& v) const {
  check(u.size());
  check(v.size());
  long long acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) acc += u[i] * gram_[i][j] * v[j];
  }
  return acc;
}

std::pair<int, int> GramLattice::signature() const {
  MatrixD m(rank(), rank());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) m(i, j) = static_cast<double>(gram_[i][j]);
  int pos = 0, neg = 0;
  for (double e : symmetric_eigenvalues(m)) {
    if (e > 1e-9) ++pos;
    else if (e < -1e-9) ++neg;
  }
  return {pos, neg};
}

long long pair_discriminant(const GramLattice& L, const LatticeVector& u1, const LatticeVector& u2) {
  const long long a = L.square(u1), b = L.pair(u1, u2), c = L.square(u2);
  return a * c - b * b;
}

MatrixQ pair_gram(const GramLattice& L, const LatticeVector& u1, const LatticeVector& u2) {
  MatrixQ g(2, 2);
  g(0, 0) = Rational(L.square(u1));
  g(0, 1) = g(1, 0) = Rational(L.pair(u1, u2));
  g(1, 1) = Rational(L.square(u2));
  return g;
}

bool dependent(const LatticeVector& u1, const LatticeVector& u2) {
  if (u1.size() != u2.size()) throw std::invalid_argument("dependent: length mismatch");
  for (std::size_t i = 0; i < u1.size(); ++i)
    for (std::size_t j = i + 1; j < u1.size(); ++j)
      if (u1[i] * u2[j] - u1[j] * u2[i] != 0) return false;
  return true;
}

}  // namespace attractor
