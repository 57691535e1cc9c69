#include "attractor/amodel.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace attractor {

namespace {

cplx lift(const Rational& r, const cplx*) { return cplx(r.to_double(), 0.0); }
QuadNumber lift(const Rational& r, const QuadNumber*) { return QuadNumber(r); }

template <class F>
F bform_impl(const std::vector<F>& z1, const std::vector<F>& z2, const EulerMatrix& chi) {
  if (chi.rows != chi.cols || z1.size() != chi.rows || z2.size() != chi.rows)
    throw std::invalid_argument("bform: dimension mismatch");
  const MatrixQ inv = inverse(chi);
  F acc(0);
  for (std::size_t i = 0; i < chi.rows; ++i)
    for (std::size_t j = 0; j < chi.cols; ++j) {
      if (inv(i, j).is_zero()) continue;
      acc += lift(inv(i, j), static_cast<const F*>(nullptr)) * z1[i] * z2[j];
    }
  return acc;
}

template <class F>
MatrixN<F> legendrian_impl(const std::vector<std::vector<F>>& dz, const EulerMatrix& chi) {
  MatrixN<F> m(dz.size(), dz.size());
  for (std::size_t i = 0; i < dz.size(); ++i)
    for (std::size_t j = 0; j < dz.size(); ++j) m(i, j) = bform_impl(dz[i], dz[j], chi);
  return m;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

cplx bform(const std::vector<cplx>& z1, const std::vector<cplx>& z2, const EulerMatrix& chi) {
  return bform_impl(z1, z2, chi);
}

QuadNumber bform(const std::vector<QuadNumber>& z1, const std::vector<QuadNumber>& z2, const EulerMatrix& chi) {
  return bform_impl(z1, z2, chi);
}

double a_potential(const std::vector<cplx>& z, const EulerMatrix& chi, int n) {
  std::vector<cplx> zc(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) zc[i] = std::conj(z[i]);
  cplx v = bform(z, zc, chi);
  // multiply by i^-n
  const int r = ((n % 4) + 4) % 4;
  for (int k = 0; k < r; ++k) v *= cplx(0.0, -1.0);
  if (!(v.real() > 0.0)) throw std::domain_error("a_potential: i^-n b(Z, conj Z) is not positive");
  return -std::log(v.real());
}

std::vector<Rational> hypersurface_chern(int n, int d) {
  if (n < 2 || n > 5 || d < 1) throw std::invalid_argument("hypersurface_chern: need 2 <= n <= 5 and d >= 1");
  const int dim = n - 1;
  std::vector<Rational> c(dim + 1, Rational(0));
  for (int k = 0; k <= dim; ++k) {
    Rational acc(0);
    long long binom = 1;  // C(n+1, j)
    for (int j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * (n + 2 - j) / j;
      Rational pw(1);
      for (int t = 0; t < k - j; ++t) pw *= Rational(-d);
      acc += Rational(binom) * pw;
    }
    c[k] = acc;
  }
  return c;
}

ChernData ChernData::dual() const {
  ChernData d = *this;
  d.ch[1] = -d.ch[1];
  d.ch[3] = -d.ch[3];
  return d;
}

ChernContext ChernContext::quintic() {
  const auto c = hypersurface_chern(4, 5);
  ChernContext ctx;
  ctx.h3 = Rational(5);
  ctx.c2 = c[2];
  ctx.c3 = c[3];
  return ctx;
}

Rational euler_pairing(const ChernData& e, const ChernData& f, const ChernContext& ctx) {
  const ChernData ed = e.dual();
  Rational deg3(0), deg1(0);
  for (int i = 0; i <= 3; ++i) deg3 += ed.ch[i] * f.ch[3 - i];
  for (int i = 0; i <= 1; ++i) deg1 += ed.ch[i] * f.ch[1 - i];
  return ctx.h3 * (deg3 + ctx.c2 / Rational(12) * deg1);
}

std::vector<ChernData> quintic_basis() {
  std::vector<ChernData> b(4);
  b[0].ch[0] = Rational(1);
  b[1].ch[1] = Rational(1);
  b[2].ch[2] = Rational(1);
  b[3].ch[3] = Rational(1, 5);
  return b;
}

EulerMatrix euler_matrix(const std::vector<ChernData>& basis, const ChernContext& ctx) {
  EulerMatrix m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = euler_pairing(basis[i], basis[j], ctx);
  return m;
}

double lambda_quintic() {
  const double zeta3 = 1.2020569031595942;
  const double tp = 2.0 * std::numbers::pi;
  return -zeta3 / (tp * tp * tp);
}

std::array<std::pair<Rational, Rational>, 4> classical_charge_coefficients(const ChernData& f,
                                                                          const ChernContext& ctx) {
  // v_X = ch (1 + c2/24) (1 + i lam c3)
  const Rational q24 = ctx.c2 / Rational(24);
  const Rational v0 = f.ch[0], v1 = f.ch[1], v2 = f.ch[2] + f.ch[0] * q24;
  const Rational v3 = f.ch[3] + f.ch[1] * q24;
  const Rational v3lam = ctx.c3 * f.ch[0];
  const Rational& h = ctx.h3;
  // -h (v3 - tau v2 + tau^2 v1/2 - tau^3 v0/6)
  return {{{-h * v3, -h * v3lam},
           {h * v2, Rational(0)},
           {-h * v1 / Rational(2), Rational(0)},
           {h * v0 / Rational(6), Rational(0)}}};
}

QuadNumber classical_charge_exact(const QuadNumber& tau, const ChernData& f, const ChernContext& ctx,
                                  const Rational& lam) {
  const auto a = classical_charge_coefficients(f, ctx);
  QuadNumber z(0), pw(1);
  for (int k = 0; k < 4; ++k) {
    z += (QuadNumber(a[k].first) + QuadNumber::i() * QuadNumber(lam * a[k].second)) * pw;
    pw *= tau;
  }
  return z;
}

QuadNumber classical_charge_exact_dtau(const QuadNumber& tau, const ChernData& f, const ChernContext& ctx,
                                       const Rational& lam) {
  const auto a = classical_charge_coefficients(f, ctx);
  QuadNumber z(0), pw(1);
  for (int k = 1; k < 4; ++k) {
    z += QuadNumber(k) * (QuadNumber(a[k].first) + QuadNumber::i() * QuadNumber(lam * a[k].second)) * pw;
    pw *= tau;
  }
  return z;
}

cplx quintic_central_charge(cplx tau, const ChernData& f, const GWTable& gw) {
  if (!(tau.imag() > 0)) throw std::domain_error("quintic_central_charge: Im tau must be positive");
  const ChernContext ctx = ChernContext::quintic();
  const auto a = classical_charge_coefficients(f, ctx);
  const double lam = lambda_quintic();
  cplx z = 0.0, pw = 1.0;
  for (int k = 0; k < 4; ++k) {
    z += cplx(a[k].first.to_double(), lam * a[k].second.to_double()) * pw;
    pw *= tau;
  }
  if (gw.empty()) return z;
  const cplx q = std::exp(cplx(0.0, 2.0 * std::numbers::pi) * tau);
  cplx s0 = 0.0, s1 = 0.0;
  for (const auto& [d, nd] : gw) {
    const cplx t = nd.to_double() * std::pow(q, d);
    s0 += t;
    s1 += t * static_cast<double>(d);
  }
  const double ch0 = f.ch[0].to_double();
  const double int_ch1_h2 = (f.ch[1] * ctx.h3).to_double();
  z += 2.0 * ch0 * (cplx(0.0, std::numbers::pi) * tau * s1 + s0);
  z += s1 * int_ch1_h2 / 5.0;
  return z;
}

double quintic_a_potential(cplx tau, const GWTable& gw) {
  const auto basis = quintic_basis();
  std::vector<cplx> z;
  for (const auto& b : basis) z.push_back(quintic_central_charge(tau, b, gw));
  return a_potential(z, euler_matrix(basis, ChernContext::quintic()), 3);
}

GWTable load_gw_table(std::istream& in) {
  GWTable t;
  std::string line;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "d,N_d") throw std::runtime_error("GW table: expected header 'd,N_d'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("GW table: malformed row " + std::to_string(lineno));
    int d = 0;
    try {
      std::size_t used = 0;
      const std::string ds = trim(line.substr(0, comma));
      d = std::stoi(ds, &used);
      if (used != ds.size()) throw std::invalid_argument(ds);
      const Rational nd = Rational::parse(trim(line.substr(comma + 1)));
      if (d < 1) throw std::runtime_error("GW table: degree must be positive on row " + std::to_string(lineno));
      if (!t.emplace(d, nd).second)
        throw std::runtime_error("GW table: duplicate degree on row " + std::to_string(lineno));
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("GW table: malformed row " + std::to_string(lineno));
    } catch (const std::out_of_range&) {
      throw std::runtime_error("GW table: malformed row " + std::to_string(lineno));
    }
  }
  if (!header) throw std::runtime_error("GW table: missing header");
  return t;
}

GWTable load_gw_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("GW table: cannot open " + path);
  return load_gw_table(in);
}

EulerMatrix elliptic_euler_matrix() {
  EulerMatrix m(2, 2);
  m(0, 1) = Rational(1);
  m(1, 0) = Rational(-1);
  return m;
}

std::vector<cplx> elliptic_charge(cplx tau) { return {tau, cplx(-1.0, 0.0)}; }

MatrixN<QuadNumber> legendrian_residual(const std::vector<std::vector<QuadNumber>>& dz, const EulerMatrix& chi) {
  return legendrian_impl(dz, chi);
}

MatrixN<cplx> legendrian_residual(const std::vector<std::vector<cplx>>& dz, const EulerMatrix& chi) {
  return legendrian_impl(dz, chi);
}

Rational kahler_attractor_residual(const std::vector<Rational>& f, const EulerMatrix& chi, const QuadNumber& C,
                                   const std::vector<QuadNumber>& z) {
  if (f.size() != chi.rows || z.size() != chi.cols) throw std::invalid_argument("kahler_attractor_residual: size");
  Rational r(0);
  for (std::size_t j = 0; j < chi.cols; ++j) {
    Rational lhs(0);
    for (std::size_t i = 0; i < chi.rows; ++i) lhs += f[i] * chi(i, j);
    r = max_real(r, (lhs - (C * z[j]).re()).abs());
  }
  return r;
}

double kahler_attractor_residual(const std::vector<double>& f, const EulerMatrix& chi, cplx C,
                                 const std::vector<cplx>& z) {
  if (f.size() != chi.rows || z.size() != chi.cols) throw std::invalid_argument("kahler_attractor_residual: size");
  double r = 0.0;
  for (std::size_t j = 0; j < chi.cols; ++j) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < chi.rows; ++i) lhs += f[i] * chi(i, j).to_double();
    r = std::max(r, std::fabs(lhs - (C * z[j]).real()));
  }
  return r;
}

EulerMatrix torus_mukai_matrix() {
  EulerMatrix J(20, 20);
  J(0, 19) = Rational(1);
  J(19, 0) = Rational(-1);
  for (int a = 0; a < 9; ++a) {
    J(1 + a, 10 + a) = Rational(1);
    J(10 + a, 1 + a) = Rational(-1);
  }
  return J;
}

std::vector<Rational> torus_kahler_vector(const KahlerTorusCharge& k) {
  std::vector<Rational> v(20);
  v[0] = k.v0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      v[1 + 3 * i + j] = k.V[i][j];
      v[10 + 3 * i + j] = k.U[i][j];
    }
  v[19] = k.u0;
  return v;
}

MatrixN<QuadNumber> torus_legendrian_exact(const Mat3<QuadNumber>& w) {
  std::vector<std::vector<QuadNumber>> dz;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) dz.push_back(torus_charge_from(torus_exp_derivative(w, k, l)));
  return legendrian_residual(dz, torus_mukai_matrix());
}

}  // namespace attractor
