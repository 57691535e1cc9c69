#pragma once

#include "attractor/rational.hpp"

#include <complex>
#include <string>

namespace attractor {

/// Exact element a + b*sqrt(-k) of the imaginary quadratic field Q(sqrt(-k)),
/// k a square-free positive integer. Rationals carry k = 0.
///
/// Two numbers combine only when their kernels agree or one of them is rational;
/// anything else throws std::domain_error.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(const Rational& a);  // NOLINT(google-explicit-constructor)
  QuadNumber(long long a) : QuadNumber(Rational(a)) {}  // NOLINT
  QuadNumber(Rational a, Rational b, long long kernel);

  /// sqrt(-r) for a rational r. For r > 0 this is (s)*sqrt(-k) with k the
  /// square-free kernel of r; for r <= 0 it must be a rational square.
  static QuadNumber sqrt_neg(const Rational& r);
  /// sqrt(-1).
  static QuadNumber i() { return QuadNumber(Rational(0), Rational(1), 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long long kernel() const { return k_; }
  bool is_rational() const { return k_ == 0; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Rational re() const { return a_; }
  /// Imaginary part is im_coeff() * sqrt(kernel()).
  const Rational& im_coeff() const { return b_; }
  /// Square of the imaginary part, b^2 k, as an exact rational.
  Rational im_squared() const { return b_ * b_ * Rational(k_); }
  /// Sign of the imaginary part.
  int im_sign() const { return b_.sign(); }

  QuadNumber conj() const { return QuadNumber(a_, -b_, k_); }
  /// Field norm a^2 + k b^2 = |x|^2.
  Rational norm() const { return a_ * a_ + Rational(k_) * b_ * b_; }
  QuadNumber inverse() const;

  std::complex<double> to_complex() const;
  std::complex<long double> to_complex_ld() const;
  std::string str() const;

  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);
  QuadNumber& operator/=(const QuadNumber& o) { return *this *= o.inverse(); }

  friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
  friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
  friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
  friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }
  friend QuadNumber operator-(const QuadNumber& x) { return QuadNumber(-x.a_, -x.b_, x.k_); }

  friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.k_ == y.k_;
  }

 private:
  void normalize();
  static long long merge(long long k1, long long k2);

  Rational a_;
  Rational b_;
  long long k_ = 0;
};

/// Square-free decomposition n = s^2 * k of a positive integer. Throws
/// std::overflow_error if the kernel does not fit in 63 bits.
void square_free_split(const mpz_class& n, mpz_class& s, long long& k);

}  // namespace attractor
