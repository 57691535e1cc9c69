#include "attractor/optimizer.hpp"

#include <cmath>

namespace attractor {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> fd_gradient(const Objective& f, const std::vector<double>& x, double h) {
  std::vector<double> g(x.size());
  std::vector<double> y = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = x[i] + h;
    const long double fp = f(y);
    y[i] = x[i] - h;
    const long double fm = f(y);
    y[i] = x[i];
    g[i] = static_cast<double>((fp - fm) / (2.0L * h));
  }
  return g;
}

std::vector<std::vector<double>> fd_hessian(const Objective& f, const std::vector<double>& x, double h) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> H(n, std::vector<double>(n, 0.0));
  std::vector<double> y = x;
  const long double f0 = f(x);
  const long double h2 = static_cast<long double>(h) * h;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = x[i] + h;
    const long double fp = f(y);
    y[i] = x[i] - h;
    const long double fm = f(y);
    y[i] = x[i];
    H[i][i] = static_cast<double>((fp - 2.0L * f0 + fm) / h2);
    for (std::size_t j = i + 1; j < n; ++j) {
      long double acc = 0;
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          y[i] = x[i] + si * h;
          y[j] = x[j] + sj * h;
          acc += si * sj * f(y);
        }
      y[i] = x[i];
      y[j] = x[j];
      H[i][j] = H[j][i] = static_cast<double>(acc / (4.0L * h2));
    }
  }
  return H;
}

BfgsResult bfgs_minimize(const Objective& f, std::vector<double> x, const BfgsOptions& opt) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> H(n, std::vector<double>(n, 0.0));
  auto reset = [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) H[i][j] = (i == j) ? 1.0 : 0.0;
  };
  reset();

  BfgsResult res;
  long double fx = f(x);
  std::vector<double> g = fd_gradient(f, x, opt.fd_step);
  double gn = norm2(g);
  bool fresh = true;  // H was just reset

  std::vector<double> p(n), xn(n), s(n), yv(n), Hy(n);
  int it = 0;
  for (; it < opt.max_iters && gn >= opt.grad_tol && std::isfinite(static_cast<double>(fx)); ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc -= H[i][j] * g[j];
      p[i] = acc;
    }
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) slope += p[i] * g[i];
    if (!(slope < 0.0)) {
      reset();
      fresh = true;
      for (std::size_t i = 0; i < n; ++i) p[i] = -g[i];
      slope = -gn * gn;
    }
    const double plen = norm2(p);
    double alpha = plen > opt.max_step ? opt.max_step / plen : 1.0;

    bool accepted = false;
    long double fnew = 0;
    for (int bt = 0; bt < 40; ++bt) {
      for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + alpha * p[i];
      fnew = f(xn);
      if (std::isfinite(static_cast<double>(fnew)) && fnew <= fx + 1e-4L * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    std::vector<double> gnew;
    if (!accepted) {
      // Near the optimum the Armijo decrease is below the resolution of f;
      // take the full quasi-Newton step if it still shrinks the gradient.
      alpha = plen > opt.max_step ? opt.max_step / plen : 1.0;
      for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + alpha * p[i];
      fnew = f(xn);
      if (std::isfinite(static_cast<double>(fnew))) {
        gnew = fd_gradient(f, xn, opt.fd_step);
        if (norm2(gnew) < gn) accepted = true;
      }
      if (!accepted) {
        if (fresh) break;  // steepest descent failed too: stalled
        reset();
        fresh = true;
        continue;
      }
    } else {
      gnew = fd_gradient(f, xn, opt.fd_step);
    }

    double sy = 0.0, ss = 0.0, yy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = xn[i] - x[i];
      yv[i] = gnew[i] - g[i];
      sy += s[i] * yv[i];
      ss += s[i] * s[i];
      yy += yv[i] * yv[i];
    }
    x = xn;
    fx = fnew;
    g = gnew;
    gn = norm2(g);
    const bool was_fresh = fresh;
    fresh = false;
    if (sy > 1e-12 * std::sqrt(ss * yy)) {
      if (was_fresh) {
        // Shanno scaling of the initial inverse Hessian
        const double sc = sy / yy;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) H[i][j] *= sc;
      }
      double yHy = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += H[i][j] * yv[j];
        Hy[i] = acc;
        yHy += yv[i] * acc;
      }
      const double rho = 1.0 / sy;
      const double k = (1.0 + yHy * rho) * rho;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          H[i][j] += k * s[i] * s[j] - rho * (Hy[i] * s[j] + s[i] * Hy[j]);
    }
  }
  res.x = std::move(x);
  res.value = fx;
  res.grad_norm = gn;
  res.iters = it;
  res.converged = gn < opt.grad_tol;
  return res;
}

}  // namespace attractor
