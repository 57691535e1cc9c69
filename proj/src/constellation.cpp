#include "attractor/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace attractor {

namespace {

using Key = std::tuple<long long, long long, long long, long long>;

// (b/a, D/a^2) in lowest terms identifies tau exactly.
Key tau_key(long long a, long long b, long long D) {
  long long g1 = std::gcd(b, a);
  long long n1 = b / g1, d1 = a / g1;
  if (d1 < 0) n1 = -n1, d1 = -d1;
  const long long a2 = a * a;
  const long long g2 = std::gcd(D, a2);
  return {n1, d1, D / g2, a2 / g2};
}

template <class Fn>
void parallel_for(int n, int threads, Fn fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

QuadNumber tau_of(const GramLattice& L, const LatticeVector& u1, const LatticeVector& u2) {
  const long long a = L.square(u1), b = L.pair(u1, u2);
  const long long D = pair_discriminant(L, u1, u2);
  if (a <= 0 || D <= 0) throw NoAttractor("pair is not positive definite");
  return (QuadNumber(b) + QuadNumber::sqrt_neg(Rational(D))) / QuadNumber(a);
}

std::vector<TauPoint> tau_set(const GramLattice& L, int height, bool primitive_only, int threads) {
  if (L.rank() != 2 || !L.even() || !L.positive_definite())
    throw std::invalid_argument("tau_set: lattice must be rank 2, even and positive definite");
  if (height < 1) throw std::invalid_argument("tau_set: height must be positive");
  std::vector<LatticeVector> vecs;
  for (int x = -height; x <= height; ++x)
    for (int y = -height; y <= height; ++y) vecs.push_back({x, y});

  struct Cand {
    Key key;
    int i, j;
    long long D;
  };
  std::vector<std::vector<Cand>> per(vecs.size());
  parallel_for(static_cast<int>(vecs.size()), threads, [&](int i) {
    const auto& u1 = vecs[i];
    const long long a = L.square(u1);
    if (a == 0) return;
    for (int j = 0; j < static_cast<int>(vecs.size()); ++j) {
      const auto& u2 = vecs[j];
      const long long minor = u1[0] * u2[1] - u1[1] * u2[0];
      if (minor == 0) continue;
      if (primitive_only && std::llabs(minor) != 1) continue;  // basis of a primitive sublattice
      const long long b = L.pair(u1, u2);
      const long long D = a * L.square(u2) - b * b;
      per[i].push_back({tau_key(a, b, D), i, j, D});
    }
  });

  std::set<Key> seen;
  std::vector<TauPoint> out;
  for (const auto& bucket : per)
    for (const auto& c : bucket) {
      if (!seen.insert(c.key).second) continue;
      TauPoint p;
      p.u1 = vecs[c.i];
      p.u2 = vecs[c.j];
      p.D = c.D;
      p.tau = tau_of(L, p.u1, p.u2);
      out.push_back(std::move(p));
    }
  return out;
}

double covering_radius(const std::vector<std::complex<double>>& pts, const Box& box, int grid) {
  if (pts.empty()) throw std::invalid_argument("covering_radius: empty point set");
  if (!(box.c > 0) || grid < 2 || !(box.b >= box.a) || !(box.d >= box.c))
    throw std::invalid_argument("covering_radius: need c > 0, a <= b, c <= d and grid >= 2");
  auto radius = [&](const std::vector<std::complex<double>>& set) {
    double worst = 0.0;
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        const std::complex<double> g(box.a + (box.b - box.a) * i / (grid - 1),
                                     box.c + (box.d - box.c) * j / (grid - 1));
        double best = INFINITY;
        for (const auto& p : set) best = std::min(best, std::abs(p - g));
        worst = std::max(worst, best);
      }
    return worst;
  };
  // Points more than 1 away from the box cannot be nearest when the radius is <= 1.
  std::vector<std::complex<double>> near;
  for (const auto& p : pts)
    if (p.real() >= box.a - 1 && p.real() <= box.b + 1 && p.imag() >= box.c - 1 && p.imag() <= box.d + 1)
      near.push_back(p);
  if (!near.empty()) {
    const double r = radius(near);
    if (r <= 1.0) return r;
  }
  return radius(pts);
}

double covering_radius(const std::vector<TauPoint>& pts, const Box& box, int grid) {
  std::vector<std::complex<double>> z;
  z.reserve(pts.size());
  for (const auto& p : pts) z.push_back(p.tau.to_complex());
  return covering_radius(z, box, grid);
}

std::vector<TorusConstellationPoint> torus_constellation(int height, std::size_t limit, int threads) {
  if (height < 1) throw std::invalid_argument("torus_constellation: height must be positive");
  const int side = 2 * height + 1;
  // digits: p0, P00 P01 P02 P11 P12 P22, Q00 Q01 Q02 Q11 Q12 Q22, q0
  constexpr int nd = 14;
  std::vector<std::vector<std::array<long long, nd>>> per(side);
  parallel_for(side, threads, [&](int first) {
    std::array<long long, nd> d{};
    d[0] = first - height;
    std::array<int, nd> idx{};
    for (int k = 1; k < nd; ++k) idx[k] = 0;
    while (true) {
      for (int k = 1; k < nd; ++k) d[k] = idx[k] - height;
      // canonical sign: first nonzero digit positive
      int lead = 0;
      while (lead < nd && d[lead] == 0) ++lead;
      if (lead < nd && d[lead] > 0) {
        TorusChargeT<long long> c;
        c.p0 = d[0];
        const int up[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
        for (int k = 0; k < 6; ++k) {
          const int i = up[k][0], j = up[k][1];
          c.P[i][j] = c.P[j][i] = d[1 + k];
          c.Q[i][j] = c.Q[j][i] = d[7 + k];
        }
        c.q0 = d[13];
        const auto inv = invariants(c);
        const auto& R = inv.R;
        const long long m2 = R[0][0] * R[1][1] - R[0][1] * R[1][0];
        if (inv.D > 0 && R[0][0] > 0 && m2 > 0 && det3(R) > 0) {
          per[first].push_back(d);
          if (limit && per[first].size() >= limit) break;
        }
      }
      int k = nd - 1;
      while (k >= 1 && ++idx[k] == side) idx[k--] = 0;
      if (k < 1) break;
    }
  });

  std::vector<TorusConstellationPoint> out;
  for (const auto& bucket : per)
    for (const auto& d : bucket) {
      if (limit && out.size() >= limit) return out;
      TorusCharge c;
      c.p0 = Rational(d[0]);
      const int up[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
      for (int k = 0; k < 6; ++k) {
        const int i = up[k][0], j = up[k][1];
        c.P[i][j] = c.P[j][i] = Rational(d[1 + k]);
        c.Q[i][j] = c.Q[j][i] = Rational(d[7 + k]);
      }
      c.q0 = Rational(d[13]);
      const auto inv = invariants(c);
      const auto sol = solve_complex_symmetric(c);
      out.push_back({c, sol.A, inv.D, det3(inv.R)});
    }
  return out;
}

}  // namespace attractor
