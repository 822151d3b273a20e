#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "acute/errors.hpp"
#include "acute/sigma.hpp"
#include "acute/spherical.hpp"

namespace acute {

/// Parameters (x,y,z) of a slanted cube whose link at O is R and whose link at
/// the opposite vertex is target, with corner i of R matched to corner map[i]
/// of target. Each parameter is the Klein radius of a perpendicular foot.
struct DualityWitness {
  double x = 0;
  double y = 0;
  double z = 0;
  SphericalTriangle R;
  SphericalTriangle target;
  CornerMap map;
  /// sigma residuals of the equations attached to sides a, b, c.
  std::array<double, 3> residuals{};

  double param(int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double max_residual() const { return std::max({residuals[0], residuals[1], residuals[2]}); }
};

/// Absence of a solution, certified at a fixed grid resolution. The residual
/// along the feasible interval is increasing, so a sign-constant grid together
/// with sign-matching endpoint limits leaves no root.
struct AbsenceReport {
  std::string reason;
  double step = 0;
  long long points = 0;
  double interval_lo = 0;
  double interval_hi = 0;
  double residual_min = 0;
  double residual_max = 0;
  bool monotone = false;
  double limit_lo = 0;
  double limit_hi = 0;
  /// Largest change of the residual between neighbouring grid points.
  double max_increment = 0;
};

struct DualityResult {
  std::optional<DualityWitness> witness;
  std::optional<AbsenceReport> absence;
  explicit operator bool() const { return witness.has_value(); }
};

namespace detail {

inline std::array<double, 3> duality_residuals(const SphericalTriangle& R, const SphericalTriangle& T,
                                               const CornerMap& map, const std::array<double, 3>& t) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = std::abs(sigma(R.side(i), T.angle(map[i]), t[(i + 1) % 3], t[(i + 2) % 3]));
  }
  return out;
}

template <class F>
double bisect_increasing(F f, double lo, double hi) {
  // f(lo) < 0 < f(hi)
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double m = 0.5 * (lo + hi);
    if (f(m) < 0) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// R_{2,2,p} with the p-labeled corner first.
inline SphericalTriangle coxeter_22p(int p) { return SphericalTriangle::coxeter(p, 2, 2); }

/// Duality of R with R_{2,2,p}. The target's corner 0 carries the label p;
/// map sends corners of R to corners of the target.
inline std::optional<DualityWitness> solve_dual_22p(const SphericalTriangle& R, int p, const CornerMap& map = {}) {
  if (p < 2) throw PreconditionError("p must be >= 2");
  if (!map.valid()) throw PreconditionError("corner map is not a bijection");
  const SphericalTriangle T = coxeter_22p(p);
  const int i0 = map.inverse()[0];
  const int j = (i0 + 1) % 3;
  const int k = (i0 + 2) % 3;
  const double bound = pi - pi / p;
  if (!(R.side(i0) < bound && R.angle(i0) < bound && R.angle(j) < pi / 2 && R.angle(k) < pi / 2 &&
        R.side(j) < pi / 2 && R.side(k) < pi / 2)) {
    return std::nullopt;
  }
  const double ca = std::cos(R.side(i0));
  const double cb = std::cos(R.side(j));
  const double cc = std::cos(R.side(k));
  // Unknowns u at corner i0, v at j, w at k: u v = cos(side k), w u = cos(side j).
  std::array<double, 3> t{};
  if (p == 2) {
    t[i0] = std::sqrt(cb * cc / ca);
    t[j] = std::sqrt(cc * ca / cb);
    t[k] = std::sqrt(ca * cb / cc);
  } else {
    const double gamma = pi / p;
    auto f = [&](double v) { return -sigma(R.side(i0), gamma, v, v * cb / cc); };
    const double lo = cc;
    const double hi = std::min(1.0, cc / cb);
    double v = detail::bisect_increasing(f, lo, hi);
    for (int it = 0; it < 3; ++it) {
      const double h = 1e-7 * std::max(v, 1e-3);
      const double d = (f(v + h) - f(v - h)) / (2 * h);
      const double next = v - f(v) / d;
      if (!(next > lo && next < hi) || std::abs(f(next)) >= std::abs(f(v))) break;
      v = next;
    }
    t[j] = v;
    t[i0] = cc / v;
    t[k] = v * cb / cc;
  }
  for (double s : t) {
    if (!(s > 0 && s < 1)) return std::nullopt;
  }
  DualityWitness w{t[0], t[1], t[2], R, T, map, {}};
  w.residuals = detail::duality_residuals(R, T, map, t);
  return w;
}

/// Solves sigma_{a,A'}(y,z) = sigma_{b,B'}(z,x) = sigma_{c,C'}(x,y) = 0 over
/// (0,1)^3, where A' = target.angle(map[0]) and so on. The search runs along x
/// with y and z on their curves; the residual in the first equation is
/// increasing in x.
inline DualityResult solve_dual_general(const SphericalTriangle& R, const SphericalTriangle& target,
                                        const CornerMap& map = {}, double step = 1e-4) {
  if (!map.valid()) throw PreconditionError("corner map is not a bijection");
  if (!(step > 0 && step <= 1e-4)) throw PreconditionError("grid step must lie in (0, 1e-4]");
  DualityResult result;
  AbsenceReport report;
  report.step = step;
  for (int i = 0; i < 3; ++i) {
    const double g = target.angle(map[i]);
    if (!(g > 0 && g <= pi / 2)) {
      report.reason = "target angle " + std::to_string(g) + " at matched corner " + std::to_string(map[i]) +
                      " is not in (0, pi/2]";
      result.absence = report;
      return result;
    }
    if (!(g < pi - R.side(i))) {
      report.reason = "side " + std::to_string(R.side(i)) + " plus matched target angle reaches pi";
      result.absence = report;
      return result;
    }
  }
  const SigmaCurve ka(R.a(), target.angle(map[0]));
  const SigmaCurve kb(R.b(), target.angle(map[1]));
  const SigmaCurve kc(R.c(), target.angle(map[2]));
  const double lo = std::max(kc.x_min(), kb.x_min());
  const double hi = std::min(kc.x_max(), kb.x_max());
  report.interval_lo = lo;
  report.interval_hi = hi;
  if (!(lo < hi)) {
    report.reason = "feasible x-interval is empty";
    result.absence = report;
    return result;
  }

  // y and z as functions of x, with the curve limits at the interval ends.
  auto y_of = [&](double x) {
    if (x <= kc.x_min()) return kc.y_at_x_min();
    if (x >= kc.x_max()) return kc.y_at_x_max();
    return solve_on_curve(kc, x);
  };
  auto z_of = [&](double x) {
    if (x <= kb.x_min()) return kb.y_at_x_min();
    if (x >= kb.x_max()) return kb.y_at_x_max();
    return solve_on_curve(kb, x);
  };
  auto f = [&](double x) { return sigma(ka.c, ka.gamma, y_of(x), z_of(x)); };

  report.limit_lo = f(lo);
  report.limit_hi = f(hi);
  const long long n = static_cast<long long>(std::ceil((hi - lo) / step));
  const double h = (hi - lo) / static_cast<double>(n);
  report.points = n + 1;
  report.monotone = true;
  report.residual_min = std::numeric_limits<double>::infinity();
  report.residual_max = -std::numeric_limits<double>::infinity();
  double prev_x = lo;
  double prev = report.limit_lo;
  for (long long k = 0; k <= n; ++k) {
    const double x = k == 0 ? lo : (k == n ? hi : lo + h * static_cast<double>(k));
    const double v = k == 0 ? report.limit_lo : (k == n ? report.limit_hi : f(x));
    report.residual_min = std::min(report.residual_min, v);
    report.residual_max = std::max(report.residual_max, v);
    if (k > 0) {
      report.max_increment = std::max(report.max_increment, std::abs(v - prev));
      if (v < prev) report.monotone = false;
      if ((prev < 0 && v >= 0) || (prev <= 0 && v > 0)) {
        double root = v == 0 ? x : detail::bisect_increasing(f, prev_x, x);
        if (!(root > lo && root < hi)) break;
        const std::array<double, 3> t{root, y_of(root), z_of(root)};
        DualityWitness w{t[0], t[1], t[2], R, target, map, {}};
        w.residuals = detail::duality_residuals(R, target, map, t);
        result.witness = w;
        return result;
      }
    }
    prev = v;
    prev_x = x;
  }
  report.reason = report.residual_max < 0 ? "residual negative on the whole feasible interval"
                                          : "residual positive on the whole feasible interval";
  result.absence = report;
  return result;
}

}  // namespace acute
