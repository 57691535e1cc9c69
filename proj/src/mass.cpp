#include "attractor/mass.hpp"

#include "attractor/exterior.hpp"
#include "attractor/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace attractor {

void MassConfig::validate() const {
  if (!(grad_tol > 0) || max_iters <= 0 || !(fd_step > 0) || n_starts <= 0 || threads <= 0)
    throw std::invalid_argument("MassConfig: all fields must be positive");
}

double ExactSqrt::value() const {
  return coeff.to_double() * std::sqrt(static_cast<double>(kernel));
}

double torus_volume_pairing(const Mat3<cplx>& T) {
  if (!in_siegel(T)) throw std::domain_error("torus_volume_pairing: T is not in the Siegel space");
  const auto top = integrate_top(wedge(holomorphic_form(T), holomorphic_form(conj3(T))));
  return (cplx(0.0, 1.0) * top).real();
}

ExactSqrt torus_volume_pairing(const Mat3<QuadNumber>& T) {
  if (!in_siegel(T)) throw std::domain_error("torus_volume_pairing: T is not in the Siegel space");
  const QuadNumber top = integrate_top(wedge(holomorphic_form(T), holomorphic_form(conj3(T))));
  if (!top.re().is_zero()) throw std::logic_error("torus_volume_pairing: integral is not imaginary");
  // i * y sqrt(-k) = -y sqrt(k)
  return {-top.im_coeff(), top.kernel()};
}

double torus_volume_closed_form(const Mat3<cplx>& T) { return 8.0 * det3(imag_part(T)); }

ExactSqrt torus_volume_closed_form(const Mat3<QuadNumber>& T) {
  if (!in_siegel(T)) throw std::domain_error("torus_volume_closed_form: T is not in the Siegel space");
  Mat3<Rational> B;
  long long k = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      B[i][j] = T[i][j].im_coeff();
      if (T[i][j].kernel()) k = T[i][j].kernel();
    }
  // det(B sqrt(k)) = det(B) k sqrt(k)
  return {Rational(8) * det3(B) * Rational(k), k};
}

double mass(const Mat3<cplx>& T, const TorusChargeF& c) {
  return std::abs(central_charge_torus(T, c)) / std::sqrt(torus_volume_pairing(T));
}

SiegelChart::Coords SiegelChart::encode(const Mat3<cplx>& T) {
  if (!in_siegel(T)) throw std::domain_error("SiegelChart::encode: T is not in the Siegel space");
  Coords x{};
  x[0] = T[0][0].real();
  x[1] = T[0][1].real();
  x[2] = T[0][2].real();
  x[3] = T[1][1].real();
  x[4] = T[1][2].real();
  x[5] = T[2][2].real();
  const Mat3<double> Y = imag_part(T);
  const double l00 = std::sqrt(Y[0][0]);
  const double l10 = Y[1][0] / l00;
  const double l11 = std::sqrt(Y[1][1] - l10 * l10);
  const double l20 = Y[2][0] / l00;
  const double l21 = (Y[2][1] - l20 * l10) / l11;
  const double l22 = std::sqrt(Y[2][2] - l20 * l20 - l21 * l21);
  x[6] = std::log(l00);
  x[7] = l10;
  x[8] = std::log(l11);
  x[9] = l20;
  x[10] = l21;
  x[11] = std::log(l22);
  return x;
}

Mat3<std::complex<long double>> SiegelChart::decode_ld(const double* x) {
  using L = long double;
  const L l00 = std::exp(static_cast<L>(x[6])), l10 = x[7], l11 = std::exp(static_cast<L>(x[8]));
  const L l20 = x[9], l21 = x[10], l22 = std::exp(static_cast<L>(x[11]));
  L Y[3][3];
  Y[0][0] = l00 * l00;
  Y[1][0] = Y[0][1] = l10 * l00;
  Y[1][1] = l10 * l10 + l11 * l11;
  Y[2][0] = Y[0][2] = l20 * l00;
  Y[2][1] = Y[1][2] = l20 * l10 + l21 * l11;
  Y[2][2] = l20 * l20 + l21 * l21 + l22 * l22;
  const L re[3][3] = {{x[0], x[1], x[2]}, {x[1], x[3], x[4]}, {x[2], x[4], x[5]}};
  Mat3<std::complex<long double>> T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) T[i][j] = {re[i][j], Y[i][j]};
  return T;
}

Mat3<cplx> SiegelChart::decode(const Coords& x) {
  const auto t = decode_ld(x.data());
  Mat3<cplx> T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) T[i][j] = cplx(static_cast<double>(t[i][j].real()), static_cast<double>(t[i][j].imag()));
  return T;
}

long double mass_squared_chart(const TorusChargeF& c, const double* x) {
  using L = long double;
  for (int k : {6, 8, 11})
    if (std::fabs(x[k]) > 40.0) return std::numeric_limits<L>::infinity();
  const auto T = SiegelChart::decode_ld(x);
  const std::complex<L> z = central_charge_torus(T, c);
  // det(Im T) = (L00 L11 L22)^2
  const L logdet = 2.0L * (static_cast<L>(x[6]) + x[8] + x[11]);
  return std::norm(z) / (8.0L * std::exp(logdet));
}

namespace {

Objective chart_objective(const TorusChargeF& c) {
  return [c](const std::vector<double>& x) { return mass_squared_chart(c, x.data()); };
}

double charge_norm2(const TorusChargeF& c) {
  double s = c.p0 * c.p0 + c.q0 * c.q0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += c.P[i][j] * c.P[i][j] + c.Q[i][j] * c.Q[i][j];
  return s;
}

MinimizeRun run_start(const TorusChargeF& c, const MassConfig& cfg, int start) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed), static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                    static_cast<std::uint32_t>(start)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> re(-2.0, 2.0), unit(-1.0, 1.0);
  std::vector<double> x(12);
  for (int i = 0; i < 6; ++i) x[i] = re(rng);
  for (int i = 6; i < 12; ++i) x[i] = unit(rng);

  BfgsOptions opt;
  opt.grad_tol = cfg.grad_tol;
  opt.max_iters = cfg.max_iters;
  opt.fd_step = cfg.fd_step;
  const BfgsResult r = bfgs_minimize(chart_objective(c), x, opt);

  MinimizeRun run;
  run.start = start;
  SiegelChart::Coords xc;
  std::copy(r.x.begin(), r.x.end(), xc.begin());
  run.T = SiegelChart::decode(xc);
  run.value = static_cast<double>(r.value);
  run.grad_norm = r.grad_norm;
  run.iters = r.iters;
  run.converged = r.converged;
  run.zero_mass = run.value < 1e-12 * (1.0 + charge_norm2(c));
  for (int k : {6, 8, 11}) run.escaped |= std::fabs(r.x[k]) > 8.0;
  for (int k = 0; k < 6; ++k) run.escaped |= std::fabs(r.x[k]) > 1e3;
  run.escaped |= !std::isfinite(run.value);
  return run;
}

}  // namespace

MinimizeResult minimize(const TorusChargeF& c, const MassConfig& cfg) {
  cfg.validate();
  MinimizeResult out;
  out.runs.resize(cfg.n_starts);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int s = next++; s < cfg.n_starts; s = next++) out.runs[s] = run_start(c, cfg, s);
  };
  const int nt = std::min(cfg.threads, cfg.n_starts);
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::sort(out.runs.begin(), out.runs.end(), [](const MinimizeRun& a, const MinimizeRun& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.start < b.start;
  });
  const MinimizeRun* best = &out.runs.front();
  for (const auto& r : out.runs)
    if (!r.zero_mass && !r.escaped) {
      best = &r;
      break;
    }
  out.T = best->T;
  out.value = best->value;
  out.grad_norm = best->grad_norm;
  out.converged = best->converged;
  out.best_start = best->start;
  out.attractor_found = best->converged && !best->zero_mass && !best->escaped;
  return out;
}

std::vector<double> mass_gradient(const TorusChargeF& c, const Mat3<cplx>& T, double h) {
  const auto x = SiegelChart::encode(T);
  return fd_gradient(chart_objective(c), std::vector<double>(x.begin(), x.end()), h);
}

MatrixD numeric_hessian(const TorusChargeF& c, const Mat3<cplx>& T, double h) {
  const auto x = SiegelChart::encode(T);
  const auto H = fd_hessian(chart_objective(c), std::vector<double>(x.begin(), x.end()), h);
  MatrixD m(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) m(i, j) = H[i][j];
  return m;
}

}  // namespace attractor
