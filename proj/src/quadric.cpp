#include "attractor/quadric.hpp"

#include "attractor/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace attractor {

namespace {

using L = long double;

struct QuadricProblem {
  std::vector<std::vector<L>> g;
  std::vector<L> u1, u2;
  std::size_t n = 0;
  bool oriented = false;  // u1, u2 independent
  L mass_unit = 1;

  // x = (Re tau, log Im tau, Re Omega[n], Im Omega[n])
  void split(const std::vector<double>& x, std::vector<L>& a, std::vector<L>& b) const {
    a.assign(x.begin() + 2, x.begin() + 2 + n);
    b.assign(x.begin() + 2 + n, x.end());
  }
  L form(const std::vector<L>& p, const std::vector<L>& q) const {
    L s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (g[i][j] != 0) s += p[i] * g[i][j] * q[j];
    return s;
  }

  struct Parts {
    L mass;
    L constraint;  // |(Omega,Omega)| / (Omega, conj Omega)
    L scale;       // log |Omega|^2
    bool ok;
  };

  Parts parts(const std::vector<double>& x) const {
    std::vector<L> a, b;
    split(x, a, b);
    const L norm = form(a, a) + form(b, b);
    if (!(norm > 0) || std::fabs(x[1]) > 40.0) return {0, 0, 0, false};
    const L ytau = std::exp(static_cast<L>(x[1]));
    // (Omega,Omega) = (a,a) - (b,b) + 2i (a,b)
    const std::complex<L> oo(form(a, a) - form(b, b), 2 * form(a, b));
    const std::complex<L> z1(form(u1, a), form(u1, b));
    const std::complex<L> z2(form(u2, a), form(u2, b));
    if (oriented && !(std::imag(z1 * std::conj(z2)) > 0)) return {0, 0, 0, false};
    const std::complex<L> tau(x[0], ytau);
    const std::complex<L> z = tau * z1 - z2;
    L e = 0;
    for (std::size_t i = 0; i < n; ++i) e += a[i] * a[i] + b[i] * b[i];
    return {std::norm(z) / (ytau * norm), std::abs(oo) / norm, std::log(e), true};
  }

  // The period domain has two components, swapped by conjugation. On the one
  // with Im(z1 conj z2) > 0 the central charge never vanishes and the
  // attractor is its minimum; runs are kept there.
  L orientation(const std::vector<L>& a, const std::vector<L>& b) const {
    const std::complex<L> z1(form(u1, a), form(u1, b)), z2(form(u2, a), form(u2, b));
    return std::imag(z1 * std::conj(z2));
  }

  L objective(const std::vector<double>& x, L mu) const {
    const Parts p = parts(x);
    if (!p.ok) return std::numeric_limits<L>::infinity();
    // the last term pins the projective scale of Omega without moving the line
    // mass is divided by the charge size so that even the first penalty weight
    // dominates it; otherwise early stages leave the quadric and cross components
    return p.mass / mass_unit + mu * p.constraint * p.constraint + 1e-2L * p.scale * p.scale;
  }
};

}  // namespace

double line_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("line_distance: length mismatch");
  // |a|^2 |b|^2 - |<a,b>|^2 summed as 2x2 minors, which avoids cancellation
  double na = 0, nb = 0, w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
    for (std::size_t j = i + 1; j < a.size(); ++j) w += std::norm(a[i] * b[j] - a[j] * b[i]);
  }
  return std::sqrt(w / (na * nb));
}

QuadricResult quadric_domain_minimize(const GramLattice& lat, const LatticeVector& u1, const LatticeVector& u2,
                                      const MassConfig& cfg) {
  cfg.validate();
  const auto sig = lat.signature();
  if (sig.first != 2 || sig.first + sig.second != lat.rank())
    throw std::invalid_argument("quadric_domain_minimize: lattice must have signature (2, m)");
  const std::size_t n = lat.rank();
  if (u1.size() != n || u2.size() != n) throw std::invalid_argument("quadric_domain_minimize: vector length");
  if (std::all_of(u1.begin(), u1.end(), [](long long v) { return v == 0; }) &&
      std::all_of(u2.begin(), u2.end(), [](long long v) { return v == 0; }))
    throw std::invalid_argument("quadric_domain_minimize: zero charge");

  QuadricProblem prob;
  prob.n = n;
  prob.g.assign(n, std::vector<L>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prob.g[i][j] = lat.entry(i, j);
  prob.u1.assign(u1.begin(), u1.end());
  prob.u2.assign(u2.begin(), u2.end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) prob.oriented = prob.oriented || u1[i] * u2[j] != u1[j] * u2[i];

  // Integral charges have attractor mass^2 = 2 sqrt(D) >= 2, so anything far
  // below the charge size sits on the sheet where the central charge vanishes.
  double usize = 1;
  for (std::size_t i = 0; i < n; ++i) usize += double(u1[i]) * u1[i] + double(u2[i]) * u2[i];
  const double zero_level = 1e-6 * usize;
  prob.mass_unit = usize;

  QuadricResult out;
  for (int start = 0; start < cfg.n_starts; ++start) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed), static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                      static_cast<std::uint32_t>(start), 0x51u};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> x(2 + 2 * n);
    // a start on the quadric: (a,a) = (b,b) > 0, (a,b) = 0
    int attempts = 0;
    while (true) {
      if (++attempts > 10000) throw std::invalid_argument("quadric_domain_minimize: no admissible starting point");
      std::vector<L> a(n), b(n);
      for (auto& v : a) v = gauss(rng);
      for (auto& v : b) v = gauss(rng);
      const L aa = prob.form(a, a);
      if (!(aa > 0)) continue;
      const L t = prob.form(a, b) / aa;
      for (std::size_t i = 0; i < n; ++i) b[i] -= t * a[i];
      const L bb = prob.form(b, b);
      if (!(bb > 0)) continue;
      const L sgn = prob.oriented && prob.orientation(a, b) < 0 ? -1 : 1;
      const L sc = std::sqrt(aa / bb) * sgn;
      x[0] = unit(rng);
      x[1] = unit(rng);
      for (std::size_t i = 0; i < n; ++i) {
        x[2 + i] = static_cast<double>(a[i]);
        x[2 + n + i] = static_cast<double>(sc * b[i]);
      }
      if (prob.parts(x).ok) break;
    }

    BfgsOptions opt;
    opt.grad_tol = cfg.grad_tol;
    opt.max_iters = cfg.max_iters;
    opt.fd_step = cfg.fd_step;
    BfgsResult r;
    for (L mu = 10; mu <= 1e6L * 1.5L; mu *= 10) {
      r = bfgs_minimize([&](const std::vector<double>& y) { return prob.objective(y, mu); }, x, opt);
      x = r.x;
    }
    const auto p = prob.parts(x);
    QuadricRun run;
    run.start = start;
    run.tau = {x[0], std::exp(x[1])};
    for (std::size_t i = 0; i < n; ++i) run.omega.emplace_back(x[2 + i], x[2 + n + i]);
    run.value = static_cast<double>(p.mass);
    run.constraint = static_cast<double>(p.constraint);
    run.grad_norm = r.grad_norm;
    run.zero_mass = run.value < zero_level;
    run.stationary = run.constraint < 1e-5 && run.grad_norm < 1e-3 * (1 + run.value);
    out.runs.push_back(std::move(run));
  }
  std::sort(out.runs.begin(), out.runs.end(), [](const QuadricRun& a, const QuadricRun& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.start < b.start;
  });
  const QuadricRun* best = &out.runs.front();
  for (const auto& r : out.runs)
    if (!r.zero_mass && r.stationary) {
      best = &r;
      break;
    }
  out.tau = best->tau;
  out.omega = best->omega;
  out.value = best->value;
  out.constraint = best->constraint;
  out.converged = !best->zero_mass && best->stationary;
  return out;
}

}  // namespace attractor
