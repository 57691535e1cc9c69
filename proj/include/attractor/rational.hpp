#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace attractor {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Arbitrary precision (GMP backed).
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "p", "-p", "p/q" (whitespace-free). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;
  /// Throws std::overflow_error if not an integer fitting in long long.
  long long to_int64() const;

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  /// Throws std::domain_error on zero.
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

/// Least common multiple of two positive integers.
mpz_class lcm(const mpz_class& a, const mpz_class& b);

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return std::hash<std::string>{}(r.str()); }
};

}  // namespace attractor
