#pragma once

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "acute/duality.hpp"
#include "acute/errors.hpp"
#include "acute/parallel.hpp"
#include "acute/spherical.hpp"

namespace acute {

namespace minkowski {

using Vector4 = Eigen::Vector4d;

/// <u,v> = -u0 v0 + u1 v1 + u2 v2 + u3 v3.
inline double dot(const Vector4& u, const Vector4& v) { return -u[0] * v[0] + u.tail<3>().dot(v.tail<3>()); }

/// Hyperboloid point of a Klein-model point.
inline Vector4 lift(const Eigen::Vector3d& p) {
  const double s = 1.0 - p.squaredNorm();
  if (!(s > 0)) throw NumericalError("point outside the Klein ball");
  Vector4 out;
  out << 1.0, p;
  return out / std::sqrt(s);
}

inline double distance(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  const Vector4 d = lift(p) - lift(q);
  const double chord = std::sqrt(std::max(0.0, dot(d, d)));
  return 2.0 * std::asinh(chord / 2.0);
}

/// Unit tangent at p pointing toward q.
inline Vector4 direction(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  const Vector4 P = lift(p);
  const Vector4 Q = lift(q);
  const Vector4 t = Q + dot(Q, P) * P;
  return t / std::sqrt(dot(t, t));
}

inline double angle_between(const Vector4& u, const Vector4& v) {
  const double c = dot(u, v) / std::sqrt(dot(u, u) * dot(v, v));
  return checked_acos(std::clamp(c, -1.0 - 1e-13, 1.0 + 1e-13));
}

}  // namespace minkowski

/// Plane {p : n.p = h} in the Klein model, oriented so that the cube lies in n.p <= h.
struct KleinHalfSpace {
  Eigen::Vector3d n;
  double h = 0;
  bool contains(const Eigen::Vector3d& p, double tol = 0) const { return n.dot(p) <= h + tol; }
  minkowski::Vector4 normal() const {
    minkowski::Vector4 N;
    N << h, n;
    return N;
  }
};

/// Vertex labels of a slanted cube.
enum CubeVertex { O = 0, X = 1, Y = 2, Z = 3, Xp = 4, Yp = 5, Zp = 6, Op = 7 };

struct SlantedCubeModel {
  /// Klein coordinates indexed by CubeVertex.
  std::array<Eigen::Vector3d, 8> points;
  /// Span faces at O (opposite X, Y, Z edges in order: span(Y,Z), span(Z,X), span(X,Y)),
  /// then far faces through X, Y, Z.
  std::array<KleinHalfSpace, 6> faces;
  SphericalTriangle link_O;
  SphericalTriangle link_Op;
  /// Largest deviation of a right dihedral angle from pi/2.
  double right_angle_error = 0;
  int right_angles_checked = 0;
  double link_error = 0;

  bool contains(const Eigen::Vector3d& p) const {
    for (const auto& f : faces) {
      if (!f.contains(p)) return false;
    }
    return true;
  }

  /// Edge list as vertex pairs.
  static const std::array<std::array<int, 2>, 12>& edges() {
    static const std::array<std::array<int, 2>, 12> e{{{O, X}, {O, Y}, {O, Z}, {X, Zp}, {X, Yp}, {Y, Zp}, {Y, Xp},
                                                       {Z, Xp}, {Z, Yp}, {Op, Xp}, {Op, Yp}, {Op, Zp}}};
    return e;
  }
  double edge_length(int u, int v) const { return minkowski::distance(points[u], points[v]); }
};

namespace detail {

inline Eigen::Vector3d intersect_planes(const Eigen::Vector3d& n1, double h1, const Eigen::Vector3d& n2, double h2,
                                        const Eigen::Vector3d& n3, double h3) {
  Eigen::Matrix3d M;
  M.row(0) = n1;
  M.row(1) = n2;
  M.row(2) = n3;
  const double det = M.determinant();
  if (std::abs(det) < 1e-14) throw NumericalError("cube face planes are degenerate");
  return M.partialPivLu().solve(Eigen::Vector3d(h1, h2, h3));
}

/// Spherical link of vertex v with edges toward a, b, c (corners 0, 1, 2).
inline SphericalTriangle link_triangle(const Eigen::Vector3d& v, const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                       const Eigen::Vector3d& c) {
  const auto ta = minkowski::direction(v, a);
  const auto tb = minkowski::direction(v, b);
  const auto tc = minkowski::direction(v, c);
  return SphericalTriangle::from_sides(minkowski::angle_between(tb, tc), minkowski::angle_between(tc, ta),
                                       minkowski::angle_between(ta, tb));
}

inline double dihedral(const KleinHalfSpace& f, const KleinHalfSpace& g) {
  const auto N1 = f.normal();
  const auto N2 = g.normal();
  const double c = -minkowski::dot(N1, N2) / std::sqrt(minkowski::dot(N1, N1) * minkowski::dot(N2, N2));
  return checked_acos(std::clamp(c, -1.0 - 1e-13, 1.0 + 1e-13));
}

inline double triangle_distance(const SphericalTriangle& R, const SphericalTriangle& S, const CornerMap& map) {
  double e = 0;
  for (int i = 0; i < 3; ++i) {
    e = std::max(e, std::abs(R.angle(i) - S.angle(map[i])));
    e = std::max(e, std::abs(R.side(i) - S.side(map[i])));
  }
  return e;
}

}  // namespace detail

/// Klein-model reconstruction of the cube of a duality witness: O at the
/// origin, the feet X, Y, Z at Euclidean radius x, y, z, and the far faces
/// perpendicular to OX, OY, OZ through the feet.
inline SlantedCubeModel build_slanted_cube(const DualityWitness& w, double tol = 1e-8) {
  for (double t : {w.x, w.y, w.z}) {
    if (!(t > 0 && t < 1)) throw PreconditionError("witness parameters must lie in (0,1)");
  }
  const SphericalTriangle& R = w.R;
  const double ca = std::cos(R.a());
  const double cb = std::cos(R.b());
  const double cc = std::cos(R.c());
  const double sc = std::sin(R.c());
  const double t = (ca - cb * cc) / sc;
  const double s = std::sqrt(std::max(0.0, 1 - cb * cb - t * t));
  const std::array<Eigen::Vector3d, 3> u{Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(cc, sc, 0),
                                         Eigen::Vector3d(cb, t, s)};
  const std::array<double, 3> r{w.x, w.y, w.z};

  SlantedCubeModel m;
  m.link_O = R;
  m.points[O] = Eigen::Vector3d::Zero();
  for (int i = 0; i < 3; ++i) m.points[X + i] = r[i] * u[i];

  // Span plane through O containing u[j], u[k], i.e. opposite the edge O->X_i.
  std::array<Eigen::Vector3d, 3> span;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d n = u[(i + 1) % 3].cross(u[(i + 2) % 3]).normalized();
    if (n.dot(u[i]) > 0) n = -n;  // the cube lies on the side of u[i]
    span[i] = -n;
    m.faces[i] = {n, 0.0};
  }
  for (int i = 0; i < 3; ++i) m.faces[3 + i] = {u[i], r[i]};

  m.points[Op] = detail::intersect_planes(u[0], r[0], u[1], r[1], u[2], r[2]);
  // X_i' lies on the far planes j, k and on the span plane opposite X_i.
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    m.points[Xp + i] = detail::intersect_planes(u[j], r[j], u[k], r[k], span[i], 0.0);
  }
  for (const auto& p : m.points) {
    if (!(p.squaredNorm() < 1.0)) throw NumericalError("slanted cube vertex outside the Klein ball");
  }
  const Eigen::Vector3d centre = [&] {
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& p : m.points) c += p;
    return Eigen::Vector3d(c / 8.0);
  }();
  for (const auto& f : m.faces) {
    if (!f.contains(centre)) throw InternalError("slanted cube face orientation is inconsistent");
  }

  const SphericalTriangle at_O = detail::link_triangle(m.points[O], m.points[X], m.points[Y], m.points[Z]);
  m.link_Op = detail::link_triangle(m.points[Op], m.points[Xp], m.points[Yp], m.points[Zp]);
  m.link_error = std::max(detail::triangle_distance(at_O, R, CornerMap{}),
                          detail::triangle_distance(m.link_Op, w.target, w.map));

  // Edges X_i -- X_j' (i != j) join a span face and a far face and are right.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      m.right_angle_error =
          std::max(m.right_angle_error, std::abs(detail::dihedral(m.faces[j], m.faces[3 + i]) - pi / 2));
      ++m.right_angles_checked;
    }
  }
  bool all_right_target = true;
  for (double a : w.target.angles()) all_right_target = all_right_target && std::abs(a - pi / 2) < 1e-12;
  if (all_right_target) {
    for (int i = 0; i < 3; ++i) {
      const double d = detail::dihedral(m.faces[3 + (i + 1) % 3], m.faces[3 + (i + 2) % 3]);
      m.right_angle_error = std::max(m.right_angle_error, std::abs(d - pi / 2));
      ++m.right_angles_checked;
    }
  }
  if (m.link_error > tol) {
    throw NumericalError("reconstructed cube links deviate by " + std::to_string(m.link_error));
  }
  if (m.right_angle_error > tol) {
    throw NumericalError("reconstructed cube right angles deviate by " + std::to_string(m.right_angle_error));
  }
  return m;
}

struct VolumeEstimate {
  double value = 0;
  double standard_error = 0;
  long long samples = 0;
};

namespace detail {

struct Welford {
  long long n = 0;
  double mean = 0;
  double m2 = 0;

  void add(double v) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }
  void merge(const Welford& o) {
    if (o.n == 0) return;
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

inline constexpr int volume_shards = 64;

}  // namespace detail

/// Monte Carlo hyperbolic volume: uniform samples in the Euclidean bounding
/// box of the cube, weighted by the Klein density (1 - |p|^2)^-2. Shards have
/// fixed seeds, so the estimate does not depend on the thread count.
inline VolumeEstimate volume(const SlantedCubeModel& cube, long long samples, unsigned long long seed = 1) {
  if (samples < 1000) throw PreconditionError("volume needs at least 1000 samples");
  Eigen::Vector3d lo = cube.points[0];
  Eigen::Vector3d hi = cube.points[0];
  for (const auto& p : cube.points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Eigen::Vector3d ext = hi - lo;
  const double box = ext.prod();
  std::vector<detail::Welford> parts(detail::volume_shards);
  parallel_for(detail::volume_shards, [&](int s) {
    const long long per = samples / detail::volume_shards + (s < samples % detail::volume_shards ? 1 : 0);
    std::mt19937_64 rng(mix_seed(seed * 1000003ULL + static_cast<unsigned long long>(s)));
    std::uniform_real_distribution<double> U(0.0, 1.0);
    detail::Welford acc;
    for (long long k = 0; k < per; ++k) {
      const Eigen::Vector3d p(lo[0] + ext[0] * U(rng), lo[1] + ext[1] * U(rng), lo[2] + ext[2] * U(rng));
      double v = 0;
      if (cube.contains(p)) {
        const double q = 1.0 - p.squaredNorm();
        v = 1.0 / (q * q);
      }
      acc.add(v);
    }
    parts[s] = acc;
  });
  detail::Welford total;
  for (const auto& p : parts) total.merge(p);
  VolumeEstimate out;
  out.samples = total.n;
  out.value = box * total.mean;
  out.standard_error = box * std::sqrt(total.m2 / static_cast<double>(total.n - 1) / static_cast<double>(total.n));
  return out;
}

}  // namespace acute
