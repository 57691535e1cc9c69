#pragma once

#include <functional>
#include <vector>

namespace attractor {

using Objective = std::function<long double(const std::vector<double>&)>;

struct BfgsOptions {
  double grad_tol = 1e-10;
  int max_iters = 500;
  double fd_step = 1e-6;
  double max_step = 2.0;  // cap on the Euclidean length of a trial step
};

struct BfgsResult {
  std::vector<double> x;
  long double value = 0;
  double grad_norm = 0;
  int iters = 0;
  bool converged = false;
};

/// Central-difference gradient; each component costs two evaluations.
std::vector<double> fd_gradient(const Objective& f, const std::vector<double>& x, double h);

/// Central-difference Hessian (4-point off-diagonal stencil), symmetric by construction.
std::vector<std::vector<double>> fd_hessian(const Objective& f, const std::vector<double>& x, double h);

/// Quasi-Newton descent with Armijo backtracking on finite-difference gradients.
/// Non-finite objective values count as failed trial steps.
BfgsResult bfgs_minimize(const Objective& f, std::vector<double> x, const BfgsOptions& opt);

double norm2(const std::vector<double>& v);

}  // namespace attractor
