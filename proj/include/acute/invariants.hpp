#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "acute/duality.hpp"
#include "acute/errors.hpp"
#include "acute/predicates.hpp"
#include "acute/realization.hpp"
#include "acute/slanted_cube.hpp"
#include "acute/spherical.hpp"

namespace acute {

/// Sum over the realized faces of the volumes of the slanted cubes dual to
/// R_{2,2,2}.
inline VolumeEstimate beta(const GeodesicRealization& T, long long samples_per_face, unsigned long long seed = 1) {
  std::vector<DualityWitness> witnesses;
  for (int f : T.scope_faces) {
    const auto& F = T.parent.face(f);
    const auto R = triangle_from_points(T.positions[F[0]], T.positions[F[1]], T.positions[F[2]]);
    if (!is_acute(R)) {
      throw PreconditionError("face {" + T.parent.id(F[0]) + "," + T.parent.id(F[1]) + "," + T.parent.id(F[2]) +
                              "} is not acute");
    }
    auto w = solve_dual_22p(R, 2);
    if (!w) throw InternalError("acute face has no all-right dual");
    witnesses.push_back(*w);
  }
  VolumeEstimate out;
  double var = 0;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto cube = build_slanted_cube(witnesses[i]);
    const auto v = volume(cube, samples_per_face, mix_seed(seed + i));
    out.value += v.value;
    out.samples += v.samples;
    var += v.standard_error * v.standard_error;
  }
  out.standard_error = std::sqrt(var);
  return out;
}

struct AlphaConfig {
  unsigned long long seed = 1;
  int tutte_starts = 4;
  int iterations_per_stage = 150;
};

struct AlphaEstimate {
  double alpha = std::numeric_limits<double>::infinity();
  std::vector<Eigen::Vector3d> positions;
  /// Starts that produced an embedded triangulation.
  int embedded_starts = 0;
  /// Best value reached from each start (infinity when none was embedded).
  std::vector<double> per_start;
};

namespace detail {

inline double max_corner_angle(const AbstractTriangulation& L, const std::vector<Eigen::Vector3d>& pos) {
  double m = 0;
  for (const auto& f : L.faces()) {
    for (int k = 0; k < 3; ++k) m = std::max(m, corner_angle(pos[f[k]], pos[f[(k + 1) % 3]], pos[f[(k + 2) % 3]]));
  }
  return m;
}

/// Smoothed maximum of all corner angles plus a log barrier on face orientation.
class MinimaxObjective {
 public:
  MinimaxObjective(const AbstractTriangulation& L, double beta, double mu) : L_(L), beta_(beta), mu_(mu) {}

  double value(const std::vector<Eigen::Vector3d>& pos) const {
    double top = -std::numeric_limits<double>::infinity();
    std::vector<double> angles;
    double barrier = 0;
    for (const auto& f : L_.faces()) {
      const double vol = oriented_volume(pos[f[0]], pos[f[1]], pos[f[2]]);
      if (!(vol > 0)) return std::numeric_limits<double>::infinity();
      barrier -= std::log(vol);
      for (int k = 0; k < 3; ++k) {
        angles.push_back(corner_angle(pos[f[k]], pos[f[(k + 1) % 3]], pos[f[(k + 2) % 3]]));
        top = std::max(top, angles.back());
      }
    }
    double s = 0;
    for (double a : angles) s += std::exp(beta_ * (a - top));
    return top + std::log(s) / beta_ + mu_ * barrier;
  }

  /// Gradient with finite differences taken face by face.
  std::vector<Eigen::Vector3d> gradient(const std::vector<Eigen::Vector3d>& pos) const {
    const int nf = L_.face_count();
    std::vector<std::array<double, 3>> angles(nf);
    double top = -std::numeric_limits<double>::infinity();
    for (int fi = 0; fi < nf; ++fi) {
      const auto& f = L_.face(fi);
      for (int k = 0; k < 3; ++k) {
        angles[fi][k] = corner_angle(pos[f[k]], pos[f[(k + 1) % 3]], pos[f[(k + 2) % 3]]);
        top = std::max(top, angles[fi][k]);
      }
    }
    double z = 0;
    for (const auto& a : angles) {
      for (double x : a) z += std::exp(beta_ * (x - top));
    }
    std::vector<Eigen::Vector3d> g(pos.size(), Eigen::Vector3d::Zero());
    const double h = 1e-7;
    for (int fi = 0; fi < nf; ++fi) {
      const auto& f = L_.face(fi);
      std::array<double, 3> w;
      for (int k = 0; k < 3; ++k) w[k] = std::exp(beta_ * (angles[fi][k] - top)) / z;
      auto local = [&](const std::array<Eigen::Vector3d, 3>& P) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += w[k] * corner_angle(P[k], P[(k + 1) % 3], P[(k + 2) % 3]);
        return s - mu_ * std::log(oriented_volume(P[0], P[1], P[2]));
      };
      std::array<Eigen::Vector3d, 3> P{pos[f[0]], pos[f[1]], pos[f[2]]};
      for (int k = 0; k < 3; ++k) {
        for (int c = 0; c < 3; ++c) {
          const double keep = P[k][c];
          P[k][c] = keep + h;
          const double up = local(P);
          P[k][c] = keep - h;
          const double down = local(P);
          P[k][c] = keep;
          g[f[k]][c] += (up - down) / (2 * h);
        }
      }
    }
    for (std::size_t v = 0; v < pos.size(); ++v) g[v] -= g[v].dot(pos[v]) * pos[v];
    return g;
  }

 private:
  const AbstractTriangulation& L_;
  double beta_;
  double mu_;
};

inline bool embedded(const AbstractTriangulation& L, const std::vector<Eigen::Vector3d>& pos) {
  return check_embedding(L, pos).ok;
}

/// Projected gradient descent with Armijo backtracking under a beta continuation.
inline std::vector<Eigen::Vector3d> minimax_descent(const AbstractTriangulation& L, std::vector<Eigen::Vector3d> pos,
                                                    int iterations, double& best, std::vector<Eigen::Vector3d>& best_pos) {
  auto consider = [&](const std::vector<Eigen::Vector3d>& p) {
    if (!embedded(L, p)) return;
    const double m = max_corner_angle(L, p);
    if (m < best) {
      best = m;
      best_pos = p;
    }
  };
  consider(pos);
  for (double beta : {10.0, 30.0, 100.0, 300.0, 1000.0, 3000.0, 10000.0}) {
    const MinimaxObjective F(L, beta, 1e-6);
    double fx = F.value(pos);
    if (!std::isfinite(fx)) break;
    double t = 0.1;
    for (int it = 0; it < iterations; ++it) {
      const auto g = F.gradient(pos);
      double gg = 0;
      for (const auto& v : g) gg += v.squaredNorm();
      if (gg < 1e-24) break;
      bool moved = false;
      t = std::min(1.0, 4 * t);
      for (int ls = 0; ls < 40; ++ls) {
        std::vector<Eigen::Vector3d> trial(pos.size());
        for (std::size_t v = 0; v < pos.size(); ++v) trial[v] = (pos[v] - t * g[v]).normalized();
        const double ft = F.value(trial);
        if (ft <= fx - 1e-4 * t * gg) {
          pos = std::move(trial);
          fx = ft;
          moved = true;
          break;
        }
        t *= 0.5;
      }
      if (!moved) break;
      if (it % 10 == 0) consider(pos);
    }
    consider(pos);
  }
  return pos;
}

}  // namespace detail

/// Local minimax estimate of the smallest achievable largest corner angle.
/// Starts from the circle pattern when one exists and from Tutte embeddings.
inline AlphaEstimate alpha_estimate(const AbstractTriangulation& L, const AlphaConfig& cfg = {}) {
  if (!L.is_closed()) throw PreconditionError("alpha_estimate needs a closed triangulation");
  const bool fns = is_flag_no_square(L);
  std::vector<std::vector<Eigen::Vector3d>> starts;
  if (fns) {
    RealizeConfig rc;
    rc.seed = cfg.seed;
    starts.push_back(realize_sphere(L, rc).positions);
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, L.face_count() - 1);
  for (int s = 0; s < cfg.tutte_starts; ++s) {
    auto pos = detail::tutte_sphere(L, pick(rng));
    int positive = 0;
    for (const auto& f : L.faces()) positive += detail::oriented_volume(pos[f[0]], pos[f[1]], pos[f[2]]) > 0;
    if (positive == 0) {
      for (auto& p : pos) p[2] = -p[2];
    }
    starts.push_back(std::move(pos));
  }
  AlphaEstimate out;
  for (auto& start : starts) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<Eigen::Vector3d> best_pos;
    detail::minimax_descent(L, start, cfg.iterations_per_stage, best, best_pos);
    out.per_start.push_back(best);
    if (std::isfinite(best)) ++out.embedded_starts;
    if (best < out.alpha) {
      out.alpha = best;
      out.positions = std::move(best_pos);
    }
  }
  if (out.embedded_starts == 0) throw NumericalError("alpha estimate found no embedded triangulation");
  if (out.alpha < pi / 2 && !fns) {
    throw InternalError("acute embedding found for a triangulation that is not flag no-square");
  }
  return out;
}

}  // namespace acute
