#pragma once

#include "attractor/rational.hpp"

#include <cstddef>
#include <vector>

namespace attractor {

/// Small dense row-major matrix over any scalar.
template <class S>
struct MatrixN {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<S> data;

  MatrixN() = default;
  MatrixN(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, S(0)) {}

  S& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static MatrixN identity(std::size_t n) {
    MatrixN m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
};

using MatrixQ = MatrixN<Rational>;
using MatrixD = MatrixN<double>;

MatrixQ to_rational(const std::vector<std::vector<long long>>& rows);

/// Exact determinant by fraction-exact Gaussian elimination.
Rational determinant(const MatrixQ& m);
/// Exact inverse. Throws std::domain_error if singular.
MatrixQ inverse(const MatrixQ& m);
MatrixQ transpose(const MatrixQ& m);
MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);

bool is_symmetric(const MatrixQ& m);
bool is_symmetric(const MatrixD& m, double tol = 0.0);

/// Exact test: all leading principal minors positive. Throws
/// std::invalid_argument on non-symmetric input.
bool is_positive_definite(const MatrixQ& m);
/// Cholesky with pivot threshold 1e-12. Throws std::invalid_argument on
/// non-symmetric input.
bool is_positive_definite(const MatrixD& m);

/// Ascending eigenvalues of a real symmetric matrix (Eigen backed).
std::vector<double> symmetric_eigenvalues(const MatrixD& m);

}  // namespace attractor
