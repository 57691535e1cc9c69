#pragma once

// Backend traits: a real scalar R (Rational or double) and its complex field
// F (QuadNumber or std::complex<double>). Closed-form solvers are written once
// against these helpers.

#include "attractor/quad_number.hpp"
#include "attractor/rational.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace attractor {

template <class R>
struct field_of;

template <>
struct field_of<Rational> {
  using type = QuadNumber;
  static constexpr bool exact = true;
};

template <>
struct field_of<double> {
  using type = std::complex<double>;
  static constexpr bool exact = false;
};

template <class R>
using field_t = typename field_of<R>::type;

using cplx = std::complex<double>;

inline Rational re(const QuadNumber& x) { return x.re(); }
inline double re(const cplx& x) { return x.real(); }

inline QuadNumber conj(const QuadNumber& x) { return x.conj(); }

inline Rational abs_real(const Rational& x) { return x.abs(); }
inline double abs_real(double x) { return std::fabs(x); }

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(double x) { return (x > 0) - (x < 0); }

inline QuadNumber sqrt_neg(const Rational& r) { return QuadNumber::sqrt_neg(r); }
inline cplx sqrt_neg(double r) {
  return r >= 0 ? cplx(0.0, std::sqrt(r)) : cplx(std::sqrt(-r), 0.0);
}

inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }
inline cplx to_complex(const QuadNumber& x) { return x.to_complex(); }
inline cplx to_complex(const cplx& x) { return x; }

/// max(a, b) for real scalars of either backend.
template <class R>
R max_real(const R& a, const R& b) {
  return a < b ? b : a;
}

}  // namespace attractor
