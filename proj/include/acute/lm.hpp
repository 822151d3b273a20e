#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "acute/errors.hpp"

namespace acute {

struct LMOptions {
  int max_iterations = 400;
  /// Stop once the largest absolute residual falls below this.
  double target = 1e-14;
  double initial_lambda = 1e-3;
};

struct LMResult {
  Eigen::VectorXd x;
  double max_residual = 0;
  double cost = 0;
  int iterations = 0;
  bool converged = false;
};

/// Dense Levenberg-Marquardt with lambda*I damping and a gain-ratio update of
/// lambda. Problem provides residual(x), jacobian(x) and retract(x), the last
/// mapping a trial point back onto the constraint manifold.
template <class Problem>
LMResult levenberg_marquardt(const Problem& problem, Eigen::VectorXd x, const LMOptions& opt = {}) {
  x = problem.retract(x);
  Eigen::VectorXd r = problem.residual(x);
  double cost = 0.5 * r.squaredNorm();
  double lambda = opt.initial_lambda;
  double nu = 2.0;
  LMResult out;
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    if (r.size() == 0 || r.cwiseAbs().maxCoeff() < opt.target) break;
    const Eigen::MatrixXd J = problem.jacobian(x);
    const Eigen::VectorXd g = J.transpose() * r;
    Eigen::MatrixXd H = J.transpose() * J;
    bool accepted = false;
    for (int tries = 0; tries < 40 && !accepted; ++tries) {
      Eigen::MatrixXd A = H;
      A.diagonal().array() += lambda;
      const Eigen::VectorXd step = A.ldlt().solve(-g);
      const Eigen::VectorXd trial = problem.retract(x + step);
      const Eigen::VectorXd rt = problem.residual(trial);
      const double trial_cost = 0.5 * rt.squaredNorm();
      const double predicted = 0.5 * step.dot(lambda * step - g);
      const double rho = predicted > 0 ? (cost - trial_cost) / predicted : -1.0;
      if (rho > 0 && std::isfinite(trial_cost)) {
        x = trial;
        r = rt;
        cost = trial_cost;
        lambda *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * rho - 1.0, 3));
        lambda = std::max(lambda, 1e-15);
        nu = 2.0;
        accepted = true;
      } else {
        lambda *= nu;
        nu *= 2.0;
      }
    }
    if (!accepted) break;
  }
  out.x = x;
  out.iterations = it;
  out.cost = cost;
  out.max_residual = r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
  out.converged = out.max_residual < opt.target;
  return out;
}

/// Largest relative deviation between the analytic Jacobian and central
/// differences at x.
template <class Problem>
double jacobian_check(const Problem& problem, const Eigen::VectorXd& x, double h = 1e-6) {
  const Eigen::MatrixXd J = problem.jacobian(x);
  double worst = 0;
  const double scale = std::max(1.0, J.cwiseAbs().maxCoeff());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Eigen::VectorXd xp = x;
    Eigen::VectorXd xm = x;
    xp[j] += h;
    xm[j] -= h;
    const Eigen::VectorXd col = (problem.residual(xp) - problem.residual(xm)) / (2 * h);
    worst = std::max(worst, (col - J.col(j)).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

}  // namespace acute
