#include "attractor/quad_number.hpp"

#include <cmath>
#include <stdexcept>

namespace attractor {

void square_free_split(const mpz_class& n, mpz_class& s, long long& k) {
  if (n <= 0) throw std::domain_error("square_free_split: non-positive input");
  mpz_class m = n;
  s = 1;
  mpz_class kern = 1;
  auto strip = [&](unsigned long p) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (int j = 0; j + 1 < e; j += 2) s *= p;
    if (e % 2) kern *= p;
  };
  strip(2);
  // Trial division; charges in this library keep discriminants well below 1e12.
  for (unsigned long p = 3; p < 2000000UL; p += 2) {
    if (mpz_class(p) * p > m) break;
    strip(p);
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      s *= r;
    } else {
      kern *= m;
    }
  }
  if (!kern.fits_slong_p()) throw std::overflow_error("square_free_split: kernel too large");
  k = kern.get_si();
}

QuadNumber::QuadNumber(const Rational& a) : a_(a) {}

QuadNumber::QuadNumber(Rational a, Rational b, long long kernel)
    : a_(std::move(a)), b_(std::move(b)), k_(kernel) {
  if (k_ < 0) throw std::domain_error("QuadNumber: negative kernel");
  if (k_ == 0 && !b_.is_zero()) throw std::domain_error("QuadNumber: kernel 0 with nonzero b");
  if (k_ > 1) {
    // move square factors of the kernel into b
    mpz_class s;
    long long k = 0;
    square_free_split(mpz_class(static_cast<long>(k_)), s, k);
    b_ *= Rational(s, mpz_class(1));
    k_ = k;
  }
  normalize();
}

void QuadNumber::normalize() {
  if (b_.is_zero()) k_ = 0;
}

long long QuadNumber::merge(long long k1, long long k2) {
  if (k1 == 0) return k2;
  if (k2 == 0 || k1 == k2) return k1;
  throw std::domain_error("QuadNumber: mixing Q(sqrt(-" + std::to_string(k1) + ")) and Q(sqrt(-" +
                          std::to_string(k2) + "))");
}

QuadNumber QuadNumber::sqrt_neg(const Rational& r) {
  if (r.sign() <= 0) {
    // sqrt of the non-negative rational -r must itself be rational.
    mpq_class v = -r.raw();
    if (!mpz_perfect_square_p(v.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(v.get_den().get_mpz_t())) {
      throw std::domain_error("sqrt_neg: sqrt(" + (-r).str() + ") is irrational");
    }
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v.get_den().get_mpz_t());
    return QuadNumber(Rational(n, d));
  }
  // sqrt(-p/q) = sqrt(-p q) / q
  mpz_class pq = r.num() * r.den();
  mpz_class s;
  long long k = 0;
  square_free_split(pq, s, k);
  return QuadNumber(Rational(0), Rational(s, r.den()), k);
}

QuadNumber QuadNumber::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw std::domain_error("QuadNumber: inverse of zero");
  return QuadNumber(a_ / n, -b_ / n, k_);
}

std::complex<double> QuadNumber::to_complex() const {
  return {a_.to_double(), b_.to_double() * std::sqrt(static_cast<double>(k_))};
}

std::complex<long double> QuadNumber::to_complex_ld() const {
  return {a_.to_long_double(), b_.to_long_double() * std::sqrt(static_cast<long double>(k_))};
}

std::string QuadNumber::str() const {
  if (k_ == 0) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str();
  const bool neg = b_.sign() < 0;
  if (!s.empty()) s += neg ? " - " : " + ";
  else if (neg) s += "-";
  Rational ab = b_.abs();
  if (ab != Rational(1)) s += ab.str() + "*";
  s += "sqrt(-" + std::to_string(k_) + ")";
  return s;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  k_ = merge(k_, o.k_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  k_ = merge(k_, o.k_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  const long long k = merge(k_, o.k_);
  Rational a = a_ * o.a_ - Rational(k) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  k_ = k;
  normalize();
  return *this;
}

}  // namespace attractor
