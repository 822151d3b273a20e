#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "acute/errors.hpp"
#include "acute/realization.hpp"
#include "acute/spherical.hpp"

namespace acute {

/// Planar orthogonal circle pattern over the original vertices of a capped
/// planar triangulation. Indices match the parent triangulation.
struct EuclideanRealization {
  std::vector<Eigen::Vector2d> positions;
  std::vector<double> radii;
  std::vector<Face> faces;
  /// Largest |(|P_u - P_v|^2 - r_u^2 - r_v^2)| / (r_u^2 + r_v^2) over edges.
  double orthogonality_error = 0;
  /// Largest deviation of the perpendicular foot ratio from r_j^2 : r_k^2.
  double foot_ratio_error = 0;
  double max_angle = 0;
  int viewpoint = -1;
};

namespace detail {

inline Eigen::Matrix3d rotation_to_north(const Eigen::Vector3d& p) {
  const Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(p, Eigen::Vector3d(0, 0, 1));
  return q.toRotationMatrix();
}

inline double planar_angle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const Eigen::Vector2d u = b - a;
  const Eigen::Vector2d v = c - a;
  return std::atan2(std::abs(u.x() * v.y() - u.y() * v.x()), u.dot(v));
}

}  // namespace detail

/// Stereographic projection of the circle pattern from the centre of a cap
/// apex disk. The viewpoint disk and every generated vertex are dropped.
inline EuclideanRealization project_euclidean(const GeodesicRealization& T, std::optional<int> viewpoint = {}) {
  if (T.closed_input()) throw PreconditionError("project_euclidean needs a realization of a planar triangulation");
  if (T.cap_centres.empty()) {
    throw PreconditionError("every boundary component is a square; no acute Euclidean realization exists");
  }
  const int vp = viewpoint.value_or(T.cap_centres.front());
  if (std::find(T.cap_centres.begin(), T.cap_centres.end(), vp) == T.cap_centres.end()) {
    throw PreconditionError("viewpoint must be the apex of a cap");
  }
  const auto& S = T.parent;
  const Eigen::Vector3d p = T.positions[vp];
  for (int v = 0; v < T.scope_vertices; ++v) {
    if (!(sphere_distance(p, T.positions[v]) > T.radii[vp] + T.radii[v])) {
      throw PreconditionError("viewpoint disk meets the disk of " + S.id(v));
    }
  }
  const Eigen::Matrix3d Q = detail::rotation_to_north(p);
  EuclideanRealization out;
  out.viewpoint = vp;
  out.positions.resize(T.scope_vertices);
  out.radii.resize(T.scope_vertices);
  for (int v = 0; v < T.scope_vertices; ++v) {
    const Eigen::Vector3d n = Q * T.positions[v];
    const double h = std::cos(T.radii[v]);
    const double d = h - n.z();
    out.positions[v] = Eigen::Vector2d(n.x(), n.y()) / d;
    out.radii[v] = std::sqrt(1 - h * h) / d;
  }
  for (int f : T.scope_faces) out.faces.push_back(S.face(f));

  for (const auto& e : S.edges()) {
    if (e.first >= T.scope_vertices || e.second >= T.scope_vertices) continue;
    const double r2 = out.radii[e.first] * out.radii[e.first] + out.radii[e.second] * out.radii[e.second];
    const double d2 = (out.positions[e.first] - out.positions[e.second]).squaredNorm();
    out.orthogonality_error = std::max(out.orthogonality_error, std::abs(d2 - r2) / r2);
  }
  bool positive = true;
  bool negative = true;
  for (const auto& F : out.faces) {
    for (int k = 0; k < 3; ++k) {
      const int i = F[k];
      const int j = F[(k + 1) % 3];
      const int l = F[(k + 2) % 3];
      const auto& Pi = out.positions[i];
      const auto& Pj = out.positions[j];
      const auto& Pl = out.positions[l];
      out.max_angle = std::max(out.max_angle, detail::planar_angle(Pi, Pj, Pl));
      const Eigen::Vector2d side = Pl - Pj;
      const double t = (Pi - Pj).dot(side) / side.squaredNorm();
      const double rj2 = out.radii[j] * out.radii[j];
      const double rl2 = out.radii[l] * out.radii[l];
      out.foot_ratio_error = std::max(out.foot_ratio_error, std::abs(t - rj2 / (rj2 + rl2)));
    }
    const Eigen::Vector2d u = out.positions[F[1]] - out.positions[F[0]];
    const Eigen::Vector2d v = out.positions[F[2]] - out.positions[F[0]];
    const double cross = u.x() * v.y() - u.y() * v.x();
    positive = positive && cross > 0;
    negative = negative && cross < 0;
  }
  if (!positive && !negative) throw NumericalError("projected triangulation is not consistently oriented");
  return out;
}

}  // namespace acute
