#include "attractor/rational.hpp"

#include <climits>
#include <stdexcept>

namespace attractor {

namespace {

mpz_class mpz_from(long long v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long n) : v_(mpz_from(n)) {}

Rational::Rational(long long num, long long den) : Rational(mpz_from(num), mpz_from(den)) {}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto head = text.substr(0, slash);
  if (!head.empty() && head[0] == '+') head.remove_prefix(1);
  if (!is_integer_literal(head)) {
    throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
  }
  mpz_class num(std::string(head), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    auto tail = text.substr(slash + 1);
    if (!is_integer_literal(tail) || tail[0] == '-' || tail[0] == '+') {
      throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    }
    den = mpz_class(std::string(tail), 10);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long double Rational::to_long_double() const {
  // Split into integer part and remainder so large numerators keep precision.
  mpz_class q = v_.get_num() / v_.get_den();
  mpq_class rem = v_ - mpq_class(q);
  return static_cast<long double>(q.get_d()) + static_cast<long double>(rem.get_d());
}

long long Rational::to_int64() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) {
    throw std::overflow_error("Rational: " + str() + " is not a 64-bit integer");
  }
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace attractor
