#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "acute/constructions.hpp"
#include "acute/coxeter.hpp"
#include "acute/errors.hpp"
#include "acute/lm.hpp"
#include "acute/predicates.hpp"
#include "acute/spherical.hpp"
#include "acute/triangulation.hpp"

namespace acute {

/// Thrown when the combinatorial checker rules out an acute realization.
class CombinatorialRefusal : public std::runtime_error {
 public:
  CombinatorialRefusal(const std::string& what, CycleWitness w) : std::runtime_error(what), witness_(std::move(w)) {}
  const CycleWitness& witness() const { return witness_; }

 private:
  CycleWitness witness_;
};

/// Circle pattern on the unit sphere over a closed triangulation. Circle
/// centres are the vertex positions; ideal vertices have radius zero.
struct GeodesicRealization {
  AbstractTriangulation parent;
  std::vector<Eigen::Vector3d> positions;
  std::vector<double> radii;
  std::vector<bool> ideal;
  /// Faces that belong to the triangulation being realized (all faces of a
  /// closed input, the original faces of a capped planar input).
  std::vector<int> scope_faces;
  int scope_vertices = 0;
  std::vector<int> cap_centres;
  unsigned long long seed = 0;
  double max_edge_residual = 0;

  bool closed_input() const { return scope_faces.size() == static_cast<std::size_t>(parent.face_count()); }
};

struct RealizeConfig {
  unsigned long long seed = 1;
  /// Required bound on the edge residuals.
  double tol = 1e-9;
  int starts = 8;
  int max_iterations = 400;
  bool check_jacobian = true;
};

struct CirclePatternResidual {
  std::vector<double> edge;
  /// d(x_u, x_v) - (r_u + r_v) for each non-adjacent pair (u < v).
  std::vector<double> clearance;
  double max_edge = 0;
  double min_clearance = 0;
};

namespace detail {

/// Unknowns: ambient coordinates of every vertex, then one radius per
/// non-ideal vertex.
class CirclePatternProblem {
 public:
  CirclePatternProblem(const AbstractTriangulation& S, const std::vector<bool>& ideal) : S_(S), ideal_(ideal) {
    radius_index_.assign(S.vertex_count(), -1);
    int k = 3 * S.vertex_count();
    for (int v = 0; v < S.vertex_count(); ++v) {
      if (!ideal[v]) radius_index_[v] = k++;
    }
    size_ = k;
  }

  int size() const { return size_; }

  Eigen::VectorXd pack(const std::vector<Eigen::Vector3d>& pos, const std::vector<double>& rad) const {
    Eigen::VectorXd x(size_);
    for (int v = 0; v < S_.vertex_count(); ++v) {
      x.segment<3>(3 * v) = pos[v];
      if (radius_index_[v] >= 0) x[radius_index_[v]] = rad[v];
    }
    return x;
  }
  void unpack(const Eigen::VectorXd& x, std::vector<Eigen::Vector3d>& pos, std::vector<double>& rad) const {
    pos.resize(S_.vertex_count());
    rad.assign(S_.vertex_count(), 0.0);
    for (int v = 0; v < S_.vertex_count(); ++v) {
      pos[v] = x.segment<3>(3 * v).normalized();
      if (radius_index_[v] >= 0) rad[v] = x[radius_index_[v]];
    }
  }

  double radius(const Eigen::VectorXd& x, int v) const { return radius_index_[v] >= 0 ? x[radius_index_[v]] : 0.0; }

  Eigen::VectorXd residual(const Eigen::VectorXd& x) const {
    Eigen::VectorXd r(S_.edge_count());
    for (int e = 0; e < S_.edge_count(); ++e) {
      const auto& ed = S_.edges()[e];
      const Eigen::Vector3d pu = x.segment<3>(3 * ed.first).normalized();
      const Eigen::Vector3d pv = x.segment<3>(3 * ed.second).normalized();
      r[e] = pu.dot(pv) - std::cos(radius(x, ed.first)) * std::cos(radius(x, ed.second));
    }
    return r;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(S_.edge_count(), size_);
    for (int e = 0; e < S_.edge_count(); ++e) {
      const auto& ed = S_.edges()[e];
      const int u = ed.first;
      const int v = ed.second;
      const Eigen::Vector3d xu = x.segment<3>(3 * u);
      const Eigen::Vector3d xv = x.segment<3>(3 * v);
      const double nu = xu.norm();
      const double nv = xv.norm();
      const Eigen::Vector3d pu = xu / nu;
      const Eigen::Vector3d pv = xv / nv;
      J.block<1, 3>(e, 3 * u) = ((pv - pu.dot(pv) * pu) / nu).transpose();
      J.block<1, 3>(e, 3 * v) = ((pu - pu.dot(pv) * pv) / nv).transpose();
      const double ru = radius(x, u);
      const double rv = radius(x, v);
      if (radius_index_[u] >= 0) J(e, radius_index_[u]) = std::sin(ru) * std::cos(rv);
      if (radius_index_[v] >= 0) J(e, radius_index_[v]) = std::cos(ru) * std::sin(rv);
    }
    return J;
  }

  Eigen::VectorXd retract(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = x;
    for (int v = 0; v < S_.vertex_count(); ++v) y.segment<3>(3 * v).normalize();
    return y;
  }

 private:
  const AbstractTriangulation& S_;
  std::vector<bool> ideal_;
  std::vector<int> radius_index_;
  int size_ = 0;
};

/// Ball automorphism sending a to the origin, restricted to the unit sphere.
inline Eigen::Vector3d mobius_to_origin(const Eigen::Vector3d& a, const Eigen::Vector3d& x) {
  const double a2 = a.squaredNorm();
  const Eigen::Vector3d d = x - a;
  const Eigen::Vector3d num = (1 - a2) * d - d.squaredNorm() * a;
  const double den = 1 - 2 * a.dot(x) + a2 * x.squaredNorm();
  return (num / den).normalized();
}

/// Moves points by Mobius maps until their centroid is near the origin.
inline void mobius_centre(std::vector<Eigen::Vector3d>& pts) {
  for (int it = 0; it < 500; ++it) {
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& p : pts) c += p;
    c /= static_cast<double>(pts.size());
    if (c.norm() < 1e-12) break;
    const Eigen::Vector3d a = 0.5 * c;
    for (auto& p : pts) p = mobius_to_origin(a, p);
  }
}

/// Uniform-weight Tutte embedding with face `outer` pinned to a triangle,
/// lifted by inverse stereographic projection and Mobius-centred.
inline std::vector<Eigen::Vector3d> tutte_sphere(const AbstractTriangulation& S, int outer) {
  const int n = S.vertex_count();
  const auto& F = S.face(outer);
  std::vector<int> index(n, -1);
  std::vector<Eigen::Vector2d> plane(n, Eigen::Vector2d::Zero());
  for (int k = 0; k < 3; ++k) {
    const double t = 2 * pi * k / 3.0;
    plane[F[k]] = Eigen::Vector2d(std::cos(t), std::sin(t));
  }
  int m = 0;
  for (int v = 0; v < n; ++v) {
    if (v != F[0] && v != F[1] && v != F[2]) index[v] = m++;
  }
  if (m > 0) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, 2);
    for (int v = 0; v < n; ++v) {
      if (index[v] < 0) continue;
      A(index[v], index[v]) = S.degree(v);
      for (int w : S.neighbors(v)) {
        if (index[w] >= 0) {
          A(index[v], index[w]) -= 1.0;
        } else {
          b.row(index[v]) += plane[w].transpose();
        }
      }
    }
    const Eigen::MatrixXd sol = A.partialPivLu().solve(b);
    for (int v = 0; v < n; ++v) {
      if (index[v] >= 0) plane[v] = sol.row(index[v]).transpose();
    }
  }
  std::vector<Eigen::Vector3d> pts(n);
  for (int v = 0; v < n; ++v) {
    const Eigen::Vector2d q = 0.5 * plane[v];
    const double s = q.squaredNorm();
    pts[v] = Eigen::Vector3d(2 * q[0], 2 * q[1], s - 1) / (1 + s);
  }
  mobius_centre(pts);
  return pts;
}

inline std::vector<double> initial_radii(const AbstractTriangulation& S, const std::vector<Eigen::Vector3d>& pos,
                                         const std::vector<bool>& ideal) {
  std::vector<double> r(S.vertex_count(), 0.0);
  for (int v = 0; v < S.vertex_count(); ++v) {
    if (ideal[v]) continue;
    double mean = 0;
    for (int w : S.neighbors(v)) mean += sphere_distance(pos[v], pos[w]);
    mean = std::min(mean / S.degree(v), 1.4);
    r[v] = std::acos(std::sqrt(std::cos(mean)));
  }
  return r;
}

/// Lorentz boost of R^{1,3} sending q (on the hyperboloid) to (1,0,0,0).
inline Eigen::Matrix4d boost_to_origin(const Eigen::Vector4d& q) {
  const double g = q[0];
  const Eigen::Vector3d n = q.tail<3>();
  Eigen::Matrix4d B;
  B(0, 0) = g;
  B.block<1, 3>(0, 1) = -n.transpose();
  B.block<3, 1>(1, 0) = -n;
  B.block<3, 3>(1, 1) = Eigen::Matrix3d::Identity() + n * n.transpose() / (g + 1);
  return B;
}

/// Applies the Mobius normalization that puts the hyperbolic point nearest
/// (in least squares) to all circle planes at the origin. The result does
/// not depend on the rotation of the input.
inline void canonical_gauge(std::vector<Eigen::Vector3d>& pos, std::vector<double>& rad,
                            const std::vector<bool>& ideal) {
  std::vector<Eigen::Vector4d> N;
  for (std::size_t v = 0; v < pos.size(); ++v) {
    if (ideal[v]) continue;
    Eigen::Vector4d n;
    n << std::cos(rad[v]) / std::sin(rad[v]), pos[v] / std::sin(rad[v]);
    N.push_back(n);
  }
  auto objective = [&](const Eigen::Vector3d& w) {
    const double q0 = std::sqrt(1 + w.squaredNorm());
    double f = 0;
    for (const auto& n : N) {
      const double s = -q0 * n[0] + w.dot(n.tail<3>());
      f += s * s;
    }
    return f;
  };
  Eigen::Vector3d w = Eigen::Vector3d::Zero();
  double f = objective(w);
  for (int it = 0; it < 100; ++it) {
    const double q0 = std::sqrt(1 + w.squaredNorm());
    const Eigen::Vector3d dq0 = w / q0;
    const Eigen::Matrix3d d2q0 = Eigen::Matrix3d::Identity() / q0 - w * w.transpose() / (q0 * q0 * q0);
    Eigen::Vector3d g = Eigen::Vector3d::Zero();
    Eigen::Matrix3d H = Eigen::Matrix3d::Zero();
    for (const auto& n : N) {
      const double s = -q0 * n[0] + w.dot(n.tail<3>());
      const Eigen::Vector3d ds = -n[0] * dq0 + n.tail<3>();
      g += 2 * s * ds;
      H += 2 * (ds * ds.transpose() - s * n[0] * d2q0);
    }
    if (g.norm() < 1e-15 * std::max(1.0, f)) break;
    Eigen::Vector3d step = H.ldlt().solve(-g);
    if (!step.allFinite() || step.dot(g) >= 0) step = -g;
    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls) {
      const Eigen::Vector3d trial = w + t * step;
      const double ft = objective(trial);
      if (ft <= f) {
        moved = ft < f || t == 1.0;
        w = trial;
        f = ft;
        break;
      }
      t *= 0.5;
    }
    if (!moved || (t * step).norm() < 1e-16) break;
  }
  Eigen::Vector4d q;
  q << std::sqrt(1 + w.squaredNorm()), w;
  const Eigen::Matrix4d B = boost_to_origin(q);
  for (std::size_t v = 0; v < pos.size(); ++v) {
    if (ideal[v]) {
      Eigen::Vector4d p;
      p << 1.0, pos[v];
      const Eigen::Vector4d bp = B * p;
      pos[v] = (bp.tail<3>() / bp[0]).normalized();
      continue;
    }
    Eigen::Vector4d n;
    n << std::cos(rad[v]) / std::sin(rad[v]), pos[v] / std::sin(rad[v]);
    const Eigen::Vector4d bn = B * n;
    rad[v] = std::atan2(1.0, bn[0]);
    pos[v] = bn.tail<3>().normalized();
  }
}

inline double oriented_volume(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
  return a.dot(b.cross(c));
}

}  // namespace detail

inline CirclePatternResidual pattern_residual(const GeodesicRealization& T) {
  const auto& S = T.parent;
  CirclePatternResidual out;
  for (const auto& e : S.edges()) {
    const double r = T.positions[e.first].dot(T.positions[e.second]) -
                     std::cos(T.radii[e.first]) * std::cos(T.radii[e.second]);
    out.edge.push_back(r);
    out.max_edge = std::max(out.max_edge, std::abs(r));
  }
  out.min_clearance = std::numeric_limits<double>::infinity();
  for (int u = 0; u < S.vertex_count(); ++u) {
    for (int v = u + 1; v < S.vertex_count(); ++v) {
      if (S.adjacent(u, v)) continue;
      const double c = sphere_distance(T.positions[u], T.positions[v]) - (T.radii[u] + T.radii[v]);
      out.clearance.push_back(c);
      out.min_clearance = std::min(out.min_clearance, c);
    }
  }
  return out;
}

struct EmbeddingCheck {
  bool ok = false;
  std::string failure;
  double max_angle_sum_error = 0;
  double area_error = 0;
};

/// Consistent positive orientation, angle sums 2*pi at every vertex, and
/// total area 4*pi.
inline EmbeddingCheck check_embedding(const AbstractTriangulation& S, const std::vector<Eigen::Vector3d>& pos) {
  EmbeddingCheck out;
  std::vector<double> sums(S.vertex_count(), 0.0);
  double total = 0;
  for (const auto& f : S.faces()) {
    if (!(detail::oriented_volume(pos[f[0]], pos[f[1]], pos[f[2]]) > 0)) {
      out.failure = "face {" + S.id(f[0]) + "," + S.id(f[1]) + "," + S.id(f[2]) + "} is not positively oriented";
      return out;
    }
    double excess = -pi;
    for (int k = 0; k < 3; ++k) {
      const double a = corner_angle(pos[f[k]], pos[f[(k + 1) % 3]], pos[f[(k + 2) % 3]]);
      sums[f[k]] += a;
      excess += a;
    }
    total += excess;
  }
  for (int v = 0; v < S.vertex_count(); ++v) {
    out.max_angle_sum_error = std::max(out.max_angle_sum_error, std::abs(sums[v] - 2 * pi));
  }
  out.area_error = std::abs(total - 4 * pi);
  if (out.max_angle_sum_error > 1e-8) {
    out.failure = "vertex angle sums deviate from 2*pi by " + std::to_string(out.max_angle_sum_error);
    return out;
  }
  if (out.area_error > 1e-6) {
    out.failure = "total area deviates from 4*pi by " + std::to_string(out.area_error);
    return out;
  }
  out.ok = true;
  return out;
}

/// Result of a single circle-pattern solve from a given start.
struct PatternSolve {
  std::vector<Eigen::Vector3d> positions;
  std::vector<double> radii;
  double max_residual = 0;
  int iterations = 0;
};

/// Solves the orthogonal circle pattern equations on S from the given start,
/// alternating least-squares rounds with the canonical Mobius gauge.
inline PatternSolve solve_circle_pattern(const AbstractTriangulation& S, const std::vector<bool>& ideal,
                                         std::vector<Eigen::Vector3d> pos, std::vector<double> rad,
                                         const RealizeConfig& cfg = {}) {
  detail::CirclePatternProblem problem(S, ideal);
  if (cfg.check_jacobian) {
    const double err = jacobian_check(problem, problem.pack(pos, rad));
    if (err > 1e-5) throw InternalError("circle pattern Jacobian disagrees with finite differences");
  }
  PatternSolve out;
  LMOptions opt;
  opt.max_iterations = cfg.max_iterations;
  opt.target = 1e-6;
  for (int round = 0; round < 3; ++round) {
    auto res = levenberg_marquardt(problem, problem.pack(pos, rad), opt);
    out.iterations += res.iterations;
    problem.unpack(res.x, pos, rad);
    bool sane = true;
    for (int v = 0; v < S.vertex_count(); ++v) sane = sane && (ideal[v] || (rad[v] > 0 && rad[v] < pi));
    if (sane && res.max_residual < 1e-2) detail::canonical_gauge(pos, rad, ideal);
    opt.target = round == 0 ? 1e-10 : 1e-15;
  }
  opt.target = 1e-15;
  opt.max_iterations = 50;
  auto res = levenberg_marquardt(problem, problem.pack(pos, rad), opt);
  out.iterations += res.iterations;
  problem.unpack(res.x, pos, rad);
  out.positions = std::move(pos);
  out.radii = std::move(rad);
  out.max_residual = problem.residual(problem.pack(out.positions, out.radii)).cwiseAbs().maxCoeff();
  return out;
}

namespace detail {

/// Vertex pairs allowed to touch: opposite rim vertices of an ideal vertex.
inline bool tangency_allowed(const AbstractTriangulation& S, const std::vector<bool>& ideal, int u, int v) {
  for (int w : S.neighbors(u)) {
    if (ideal[w] && S.adjacent(w, v)) return true;
  }
  return false;
}

inline std::string check_pattern(const AbstractTriangulation& S, const std::vector<bool>& ideal,
                                 std::vector<Eigen::Vector3d>& pos, const std::vector<double>& rad, double tol,
                                 double residual) {
  if (!(residual < tol)) return "edge residual " + std::to_string(residual) + " above tolerance";
  for (int v = 0; v < S.vertex_count(); ++v) {
    if (ideal[v]) continue;
    if (!(rad[v] > 0 && rad[v] < pi / 2)) return "radius of " + S.id(v) + " outside (0, pi/2)";
  }
  int positive = 0;
  for (const auto& f : S.faces()) positive += oriented_volume(pos[f[0]], pos[f[1]], pos[f[2]]) > 0 ? 1 : 0;
  if (positive == 0) {
    for (auto& p : pos) p[2] = -p[2];
  } else if (positive != S.face_count()) {
    return "faces are not consistently oriented";
  }
  for (int u = 0; u < S.vertex_count(); ++u) {
    for (int v = u + 1; v < S.vertex_count(); ++v) {
      if (S.adjacent(u, v)) continue;
      const double c = sphere_distance(pos[u], pos[v]) - (rad[u] + rad[v]);
      const double slack = tangency_allowed(S, ideal, u, v) ? 1e-7 : 0.0;
      if (c < -slack) return "disks of non-adjacent " + S.id(u) + " and " + S.id(v) + " overlap";
    }
  }
  auto emb = check_embedding(S, pos);
  if (!emb.ok) return emb.failure;
  return {};
}

}  // namespace detail

/// Realizes L as an acute geodesic triangulation through an orthogonal circle
/// pattern. A closed L must be flag no-square; a planar L must be flag with no
/// separating square and is first closed up by caps and square wheels.
inline GeodesicRealization realize_sphere(const AbstractTriangulation& L, const RealizeConfig& cfg = {}) {
  if (L.is_closed()) {
    if (!is_flag_no_square(L)) {
      auto w = combinatorial_obstruction(L);
      throw CombinatorialRefusal("not flag no-square: " + describe(L, *w), *w);
    }
  } else {
    if (auto w = combinatorial_obstruction(L)) {
      throw CombinatorialRefusal("not flag with no separating square: " + describe(L, *w), *w);
    }
    if (auto w = find_interior_degree_4_vertex(L)) {
      throw CombinatorialRefusal("interior vertex of degree 4 inside " + describe(L, *w), *w);
    }
  }
  CappedSurface capped = cap_planar(L);
  const AbstractTriangulation& S = capped.sphere;
  std::vector<bool> ideal(S.vertex_count(), false);
  for (int v : capped.ideal) ideal[v] = true;
  if (!L.is_closed()) {
    if (!is_flag(S) || !ideal_allright_conditions(S)) {
      throw PreconditionError("capped surface violates the ideal all-right conditions");
    }
  }

  std::mt19937_64 rng(cfg.seed);
  std::string last_failure;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int start = 0; start < cfg.starts; ++start) {
    std::uniform_int_distribution<int> pick(0, S.face_count() - 1);
    const int outer = pick(rng);
    auto pos = detail::tutte_sphere(S, outer);
    auto rad = detail::initial_radii(S, pos, ideal);
    RealizeConfig inner = cfg;
    inner.check_jacobian = cfg.check_jacobian && start == 0;
    PatternSolve sol;
    try {
      sol = solve_circle_pattern(S, ideal, std::move(pos), std::move(rad), inner);
    } catch (const NumericalError& e) {
      last_failure = e.what();
      continue;
    }
    best_residual = std::min(best_residual, sol.max_residual);
    auto failure = detail::check_pattern(S, ideal, sol.positions, sol.radii, cfg.tol, sol.max_residual);
    if (!failure.empty()) {
      last_failure = failure;
      continue;
    }
    GeodesicRealization T{S, std::move(sol.positions), std::move(sol.radii), ideal, {}, capped.original_vertices,
                          capped.cap_centres, cfg.seed, sol.max_residual};
    T.scope_faces.resize(capped.original_faces);
    std::iota(T.scope_faces.begin(), T.scope_faces.end(), 0);
    return T;
  }
  throw NumericalError("circle pattern solver did not converge after " + std::to_string(cfg.starts) +
                       " starts (best residual " + std::to_string(best_residual) + "; last failure: " + last_failure +
                       ")");
}

struct AcuteReport {
  bool pass = false;
  double max_angle = 0;
  double min_angle = 0;
  double margin = 0;
  /// Face index (into parent) of the largest angle.
  int worst_face = -1;
};

inline AcuteReport verify_acute(const GeodesicRealization& T) {
  AcuteReport out;
  out.min_angle = std::numeric_limits<double>::infinity();
  for (int f : T.scope_faces) {
    const auto& F = T.parent.face(f);
    const auto R = triangle_from_points(T.positions[F[0]], T.positions[F[1]], T.positions[F[2]]);
    for (double a : R.angles()) {
      if (a > out.max_angle) {
        out.max_angle = a;
        out.worst_face = f;
      }
      out.min_angle = std::min(out.min_angle, a);
    }
  }
  out.margin = pi / 2 - out.max_angle;
  out.pass = out.max_angle < pi / 2;
  return out;
}

struct PerpendicularReport {
  bool pass = false;
  double max_distance = 0;
  int edges_checked = 0;
};

namespace detail {

inline Eigen::Vector3d foot_on_great_circle(const Eigen::Vector3d& a, const Eigen::Vector3d& u,
                                            const Eigen::Vector3d& v) {
  const Eigen::Vector3d n = u.cross(v).normalized();
  return (a - a.dot(n) * n).normalized();
}

}  // namespace detail

/// For every interior edge of the scope, the perpendiculars from the two
/// opposite vertices meet the edge at the same point.
inline PerpendicularReport verify_coinciding_perpendiculars(const GeodesicRealization& T, double tol = 1e-6) {
  PerpendicularReport out;
  std::vector<bool> in_scope(T.parent.face_count(), false);
  for (int f : T.scope_faces) in_scope[f] = true;
  const auto& S = T.parent;
  for (int e = 0; e < S.edge_count(); ++e) {
    const auto& fs = S.edge_faces(e);
    if (fs.size() != 2 || !in_scope[fs[0]] || !in_scope[fs[1]]) continue;
    const int u = S.edges()[e].first;
    const int v = S.edges()[e].second;
    const int a = AbstractTriangulation::third_vertex(S.face(fs[0]), u, v);
    const int b = AbstractTriangulation::third_vertex(S.face(fs[1]), u, v);
    const auto fa = detail::foot_on_great_circle(T.positions[a], T.positions[u], T.positions[v]);
    const auto fb = detail::foot_on_great_circle(T.positions[b], T.positions[u], T.positions[v]);
    out.max_distance = std::max(out.max_distance, sphere_distance(fa, fb));
    ++out.edges_checked;
  }
  out.pass = out.max_distance < tol;
  return out;
}

/// Every scope face is slimmer than the polar dual of its R_{p,q,r}, where
/// the label opposite corner i is the i-th entry.
inline bool is_subordinate(const GeodesicRealization& T, const EdgeLabeling& m) {
  const auto& S = T.parent;
  for (int f : T.scope_faces) {
    const auto [p, q, r] = face_labels(S, m, f);
    if (!coxeter_face_finite(p, q, r)) throw PreconditionError("face induces an infinite triangle group");
  }
  for (int f : T.scope_faces) {
    const auto& F = S.face(f);
    const auto [p, q, r] = face_labels(S, m, f);
    const auto R = triangle_from_points(T.positions[F[0]], T.positions[F[1]], T.positions[F[2]]);
    if (!slimmer(R, polar_dual(SphericalTriangle::coxeter(p, q, r)))) return false;
  }
  return true;
}

/// Copy of a realization with the vertices moved.
inline GeodesicRealization with_positions(const GeodesicRealization& T, std::vector<Eigen::Vector3d> pos) {
  GeodesicRealization out = T;
  out.positions = std::move(pos);
  return out;
}

}  // namespace acute
