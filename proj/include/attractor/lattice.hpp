#pragma once

#include "attractor/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace attractor {

using LatticeVector = std::vector<long long>;

/// Integral symmetric bilinear form on Z^rank.
class GramLattice {
 public:
  GramLattice() = default;
  /// Throws std::invalid_argument unless gram is square and symmetric.
  explicit GramLattice(std::vector<std::vector<long long>> gram);

  int rank() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<long long>>& gram() const { return gram_; }
  bool even() const { return even_; }
  long long entry(int i, int j) const { return gram_[i][j]; }

  /// Throws std::invalid_argument on length mismatch.
  long long pair(const LatticeVector& u, const LatticeVector& v) const;
  long long square(const LatticeVector& u) const { return pair(u, u); }

  /// Pairing of vectors with coefficients in any ring containing the integers.
  template <class S>
  S pair_any(const std::vector<S>& x, const std::vector<S>& y) const {
    check(x.size());
    check(y.size());
    S acc(0);
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) {
        if (gram_[i][j] == 0) continue;
        acc += S(gram_[i][j]) * x[i] * y[j];
      }
    return acc;
  }

  MatrixQ gram_q() const { return to_rational(gram_); }
  bool positive_definite() const { return is_positive_definite(gram_q()); }
  /// Number of positive and negative eigenvalues (float, Eigen).
  std::pair<int, int> signature() const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  void check(std::size_t n) const {
    if (n != gram_.size()) throw std::invalid_argument("GramLattice: vector length does not match rank");
  }

  std::vector<std::vector<long long>> gram_;
  bool even_ = true;
};

/// u1^2 u2^2 - (u1,u2)^2.
long long pair_discriminant(const GramLattice& L, const LatticeVector& u1, const LatticeVector& u2);

/// Gram matrix of the pair, [[u1^2,(u1,u2)],[(u1,u2),u2^2]].
MatrixQ pair_gram(const GramLattice& L, const LatticeVector& u1, const LatticeVector& u2);

/// True when u1, u2 are linearly dependent over Q.
bool dependent(const LatticeVector& u1, const LatticeVector& u2);

}  // namespace attractor
