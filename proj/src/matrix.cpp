#include "attractor/matrix.hpp"
#include "attractor/mat3.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace attractor {

MatrixQ to_rational(const std::vector<std::vector<long long>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t c = n ? rows[0].size() : 0;
  MatrixQ m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("to_rational: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(rows[i][j]);
  }
  return m;
}

Rational determinant(const MatrixQ& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows;
  MatrixQ a = m;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

MatrixQ inverse(const MatrixQ& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = m.rows;
  MatrixQ a = m;
  MatrixQ inv = MatrixQ::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Rational p = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

MatrixQ transpose(const MatrixQ& m) {
  MatrixQ t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
  MatrixQ c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool is_symmetric(const MatrixQ& m) {
  if (m.rows != m.cols) return false;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_symmetric(const MatrixD& m, double tol) {
  if (m.rows != m.cols) return false;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::fabs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

bool is_positive_definite(const MatrixQ& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("is_positive_definite: non-symmetric input");
  // Symmetric elimination without pivoting: pivots are ratios of successive
  // leading minors, so all pivots > 0 iff all leading minors > 0.
  const std::size_t n = m.rows;
  MatrixQ a = m;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).sign() <= 0) return false;
    const Rational inv = a(k, k).inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const Rational f = a(r, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(r, j) -= f * a(k, j);
    }
  }
  return true;
}

bool is_positive_definite(const MatrixD& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("is_positive_definite: non-symmetric input");
  const std::size_t n = m.rows;
  std::vector<double> l(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (d <= 1e-12) return false;
    const double ljj = std::sqrt(d);
    l[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / ljj;
    }
  }
  return true;
}

std::vector<double> symmetric_eigenvalues(const MatrixD& m) {
  Eigen::MatrixXd e(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) e(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e, Eigen::EigenvaluesOnly);
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

// 3x3 helpers declared in mat3.hpp

double frobenius_distance(const Mat3<cplx>& a, const Mat3<cplx>& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += std::norm(a[i][j] - b[i][j]);
  return std::sqrt(s);
}

bool is_positive_definite(const Mat3<Rational>& s) {
  if (!is_symmetric(s)) throw std::invalid_argument("is_positive_definite: non-symmetric input");
  const Rational m1 = s[0][0];
  const Rational m2 = s[0][0] * s[1][1] - s[0][1] * s[1][0];
  return m1.sign() > 0 && m2.sign() > 0 && det3(s).sign() > 0;
}

bool is_positive_definite(const Mat3<double>& s) {
  MatrixD m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = s[i][j];
  return is_positive_definite(m);
}

Mat3<double> imag_part(const Mat3<cplx>& a) {
  Mat3<double> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i][j].imag();
  return m;
}

template <>
bool in_siegel(const Mat3<QuadNumber>& t) {
  if (!is_symmetric(t)) return false;
  long long k = 0;
  Mat3<Rational> b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& x = t[i][j];
      if (x.kernel() != 0) {
        if (k != 0 && k != x.kernel()) return false;
        k = x.kernel();
      }
      b[i][j] = x.im_coeff();
    }
  return k != 0 && is_positive_definite(b);
}

}  // namespace attractor
