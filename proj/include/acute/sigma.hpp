#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "acute/errors.hpp"
#include "acute/spherical.hpp"

namespace acute {

/// Zero set of sigma_{c,gamma}(x,y) = cos(gamma) sqrt((1-x^2)(1-y^2)) - xy + cos(c)
/// inside the open unit square.
struct SigmaCurve {
  double c = pi / 2;
  double gamma = pi / 2;

  SigmaCurve() = default;
  SigmaCurve(double c_, double gamma_) : c(c_), gamma(gamma_) {
    if (!(c > 0 && c < pi)) throw PreconditionError("sigma curve needs c in (0, pi)");
    if (!(gamma > 0 && gamma <= pi / 2 && gamma < pi - c)) {
      throw PreconditionError("sigma curve needs gamma in (0, pi - c) and gamma <= pi/2");
    }
  }

  /// Open x-interval over which the curve has a point with y in (0,1).
  double x_min() const { return std::max(0.0, std::cos(c)); }
  double x_max() const {
    const double cc = std::cos(c);
    if (cc >= 0) return 1.0;
    const double k = std::cos(gamma);
    return std::sqrt(std::max(0.0, 1.0 - (cc * cc) / (k * k)));
  }
  /// Limits of y at the two ends of the x-interval; the curve is symmetric.
  double y_at_x_min() const { return x_max(); }
  double y_at_x_max() const { return x_min(); }
};

inline double sigma(double c, double gamma, double x, double y) {
  return std::cos(gamma) * std::sqrt(std::max(0.0, (1 - x * x) * (1 - y * y))) - x * y + std::cos(c);
}

inline double sigma(const SigmaCurve& k, double x, double y) {
  if (x < 0 || x > 1 || y < 0 || y > 1) throw PreconditionError("sigma arguments must lie in [0,1]");
  return sigma(k.c, k.gamma, x, y);
}

/// Partial derivatives of sigma in x and y (both negative inside the square).
inline std::pair<double, double> sigma_gradient(const SigmaCurve& k, double x, double y) {
  const double g = std::cos(k.gamma);
  const double sx = std::sqrt(1 - x * x);
  const double sy = std::sqrt(1 - y * y);
  return {-g * x * sy / sx - y, -g * y * sx / sy - x};
}

/// The unique y in (0,1) with sigma(x,y) = 0.
inline double solve_on_curve(const SigmaCurve& k, double x) {
  const double lo = k.x_min();
  const double hi = k.x_max();
  if (!(x > lo && x < hi)) {
    throw PreconditionError("x = " + std::to_string(x) + " outside the curve domain (" + std::to_string(lo) + ", " +
                            std::to_string(hi) + ")");
  }
  if (k.gamma == pi / 2) return std::cos(k.c) / x;
  // sigma is strictly decreasing in y, positive at 0 and negative at 1.
  double a = 0.0;
  double b = 1.0;
  while (b - a > 1e-14) {
    const double m = 0.5 * (a + b);
    if (sigma(k.c, k.gamma, x, m) > 0) {
      a = m;
    } else {
      b = m;
    }
  }
  double y = 0.5 * (a + b);
  for (int it = 0; it < 3; ++it) {
    if (y <= 0 || y >= 1) break;
    const double f = sigma(k.c, k.gamma, x, y);
    const double d = sigma_gradient(k, x, y).second;
    const double next = y - f / d;
    if (!(next > 0 && next < 1)) break;
    if (std::abs(sigma(k.c, k.gamma, x, next)) >= std::abs(f)) break;
    y = next;
  }
  return y;
}

/// dy/dx along the curve; negative everywhere.
inline double curve_slope(const SigmaCurve& k, double x, double y) {
  auto [sx, sy] = sigma_gradient(k, x, y);
  return -sx / sy;
}

struct FootParameter {
  /// Poincare radius of the perpendicular foot, sec a - tan a.
  double radius = 0;
  /// |2/(r + 1/r) - cos a|.
  double identity_residual = 0;
};

/// Foot of the perpendicular from the origin to a side seen under angle a.
inline FootParameter foot_parameter(double a) {
  if (!(a >= 0 && a < pi / 2)) throw PreconditionError("foot_parameter needs a in [0, pi/2)");
  const double r = std::cos(a) / (1 + std::sin(a));
  const double residual = std::abs(2.0 / (r + 1.0 / r) - std::cos(a));
  if (residual > 1e-12) throw InternalError("foot parameter identity fails");
  return {r, residual};
}

/// Klein radius tanh(d) from Poincare radius tanh(d/2).
inline double klein_from_poincare(double r) { return 2 * r / (1 + r * r); }
inline double poincare_from_klein(double k) { return k / (1 + std::sqrt(1 - k * k)); }

}  // namespace acute
