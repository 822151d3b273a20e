#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "acute/errors.hpp"

namespace acute {

inline constexpr double pi = std::numbers::pi;
inline constexpr double default_eps_angle = 1e-9;

/// arccos that tolerates rounding just outside [-1,1] and rejects anything larger.
inline double checked_acos(double x) {
  if (x > 1.0) {
    if (x - 1.0 > 1e-12) throw NumericalError("acos argument " + std::to_string(x) + " exceeds 1");
    return 0.0;
  }
  if (x < -1.0) {
    if (-1.0 - x > 1e-12) throw NumericalError("acos argument " + std::to_string(x) + " below -1");
    return pi;
  }
  return std::acos(x);
}

/// Great-circle distance between unit vectors.
inline double sphere_distance(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

/// Interior angle at a of the geodesic triangle abc.
inline double corner_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
  const Eigen::Vector3d n1 = a.cross(b);
  const Eigen::Vector3d n2 = a.cross(c);
  return std::atan2(n1.cross(n2).norm(), n1.dot(n2));
}

/// Bijection between the corners of two triangles; corner i goes to map[i].
struct CornerMap {
  std::array<int, 3> map{0, 1, 2};

  static CornerMap identity() { return {}; }
  int operator[](int i) const { return map[i]; }
  CornerMap inverse() const {
    CornerMap inv;
    for (int i = 0; i < 3; ++i) inv.map[map[i]] = i;
    return inv;
  }
  bool valid() const {
    std::array<int, 3> s = map;
    std::sort(s.begin(), s.end());
    return s == std::array<int, 3>{0, 1, 2};
  }
  friend bool operator==(const CornerMap&, const CornerMap&) = default;
};

/// Angles A,B,C (index 0,1,2) and opposite sides a,b,c, all in (0,pi).
class SphericalTriangle {
 public:
  /// The octant triangle R_{2,2,2}.
  SphericalTriangle() = default;

  static SphericalTriangle from_sides(double a, double b, double c) {
    if (!(a > 0 && b > 0 && c > 0 && a < pi && b < pi && c < pi)) {
      throw PreconditionError("no such triangle: sides must lie in (0, pi)");
    }
    if (!(a < b + c && b < c + a && c < a + b)) throw PreconditionError("no such triangle: triangle inequality fails");
    if (!(a + b + c < 2 * pi)) throw PreconditionError("no such triangle: perimeter must be below 2*pi");
    const double s = 0.5 * (a + b + c);
    const std::array<double, 3> sd{a, b, c};
    SphericalTriangle t;
    t.sides_ = sd;
    for (int i = 0; i < 3; ++i) {
      const double x = sd[i];
      const double y = sd[(i + 1) % 3];
      const double z = sd[(i + 2) % 3];
      const double num = std::sin(s - y) * std::sin(s - z);
      const double den = std::sin(s) * std::sin(s - x);
      t.angles_[i] = 2.0 * std::atan(std::sqrt(num / den));
    }
    return t;
  }

  static SphericalTriangle from_angles(double A, double B, double C) {
    if (!(A > 0 && B > 0 && C > 0 && A < pi && B < pi && C < pi)) {
      throw PreconditionError("no such triangle: angles must lie in (0, pi)");
    }
    if (!(A + B + C > pi)) throw PreconditionError("no such triangle: angle sum must exceed pi");
    if (!(B + C < pi + A && C + A < pi + B && A + B < pi + C)) {
      throw PreconditionError("no such triangle: dual triangle inequality fails");
    }
    const double S = 0.5 * (A + B + C);
    const std::array<double, 3> an{A, B, C};
    SphericalTriangle t;
    t.angles_ = an;
    for (int i = 0; i < 3; ++i) {
      const double X = an[i];
      const double Y = an[(i + 1) % 3];
      const double Z = an[(i + 2) % 3];
      const double num = -std::cos(S) * std::cos(S - X);
      const double den = std::cos(S - Y) * std::cos(S - Z);
      t.sides_[i] = 2.0 * std::atan(std::sqrt(num / den));
    }
    return t;
  }

  /// R_{p,q,r}: angles pi/p, pi/q, pi/r.
  static SphericalTriangle coxeter(int p, int q, int r) { return from_angles(pi / p, pi / q, pi / r); }

  double angle(int i) const { return angles_.at(i); }
  double side(int i) const { return sides_.at(i); }
  const std::array<double, 3>& angles() const { return angles_; }
  const std::array<double, 3>& sides() const { return sides_; }

  double A() const { return angles_[0]; }
  double B() const { return angles_[1]; }
  double C() const { return angles_[2]; }
  double a() const { return sides_[0]; }
  double b() const { return sides_[1]; }
  double c() const { return sides_[2]; }

  /// Largest deviation from the law of cosines over the three corners.
  double law_of_cosines_residual() const {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      const double x = sides_[i];
      const double y = sides_[(i + 1) % 3];
      const double z = sides_[(i + 2) % 3];
      const double r = std::cos(x) - (std::cos(y) * std::cos(z) + std::sin(y) * std::sin(z) * std::cos(angles_[i]));
      worst = std::max(worst, std::abs(r));
    }
    return worst;
  }

  double area() const { return angles_[0] + angles_[1] + angles_[2] - pi; }

 private:
  friend SphericalTriangle polar_dual(const SphericalTriangle&, const CornerMap&);
  std::array<double, 3> angles_{pi / 2, pi / 2, pi / 2};
  std::array<double, 3> sides_{pi / 2, pi / 2, pi / 2};
};

/// Corner map[i] of the result has angle pi - side(i) and opposite side pi - angle(i).
inline SphericalTriangle polar_dual(const SphericalTriangle& R, const CornerMap& map = {}) {
  if (!map.valid()) throw PreconditionError("corner map is not a bijection");
  SphericalTriangle d;
  for (int i = 0; i < 3; ++i) {
    d.angles_[map[i]] = pi - R.side(i);
    d.sides_[map[i]] = pi - R.angle(i);
  }
  return d;
}

inline double area(const SphericalTriangle& R) { return R.area(); }

inline bool is_acute(const SphericalTriangle& R, double eps = default_eps_angle) {
  return std::all_of(R.angles().begin(), R.angles().end(), [eps](double x) { return x < pi / 2 - eps; });
}

inline bool is_strongly_obtuse(const SphericalTriangle& R, double eps = default_eps_angle) {
  for (int i = 0; i < 3; ++i) {
    if (!(R.angle(i) > pi / 2 + eps && R.side(i) > pi / 2 + eps)) return false;
  }
  return true;
}

/// Sides of an acute triangle are acute. Throws for a non-acute argument.
inline bool acute_sides_property(const SphericalTriangle& R, double eps = default_eps_angle) {
  if (!is_acute(R, eps)) throw PreconditionError("acute_sides_property needs an acute triangle");
  return R.a() < pi / 2 && R.b() < pi / 2 && R.c() < pi / 2;
}

/// Every angle and side of R strictly exceeds the matching one of S.
inline bool fatter(const SphericalTriangle& R, const SphericalTriangle& S, const CornerMap& map = {}) {
  for (int i = 0; i < 3; ++i) {
    if (!(R.angle(i) > S.angle(map[i]) && R.side(i) > S.side(map[i]))) return false;
  }
  return true;
}

inline bool slimmer(const SphericalTriangle& R, const SphericalTriangle& S, const CornerMap& map = {}) {
  return fatter(S, R, map.inverse());
}

/// Triangle of the geodesic triangle with the given unit-vector corners.
inline SphericalTriangle triangle_from_points(const Eigen::Vector3d& A, const Eigen::Vector3d& B,
                                              const Eigen::Vector3d& C) {
  return SphericalTriangle::from_sides(sphere_distance(B, C), sphere_distance(C, A), sphere_distance(A, B));
}

struct OrthocenterResult {
  Eigen::Vector3d point;
  /// Foot of the perpendicular from corner i on the opposite side.
  std::array<Eigen::Vector3d, 3> feet;
  /// Largest angular distance between pairwise intersections of the three perpendiculars.
  double concurrency = 0;
};

/// Common point of the three perpendiculars from the corners to the opposite sides.
inline OrthocenterResult orthocenter(const SphericalTriangle& R, const std::array<Eigen::Vector3d, 3>& P,
                                     double eps = default_eps_angle) {
  if (!is_acute(R, eps)) throw PreconditionError("orthocenter needs an acute triangle");
  for (int i = 0; i < 3; ++i) {
    if (std::abs(P[i].norm() - 1.0) > 1e-9) throw PreconditionError("corner is not a unit vector");
    const double d = sphere_distance(P[(i + 1) % 3], P[(i + 2) % 3]);
    if (std::abs(d - R.side(i)) > 1e-8) throw PreconditionError("corners do not realize the triangle");
  }
  const Eigen::Vector3d centroid = P[0] + P[1] + P[2];
  std::array<Eigen::Vector3d, 3> normals;
  OrthocenterResult out;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3d& X = P[i];
    const Eigen::Vector3d pole = P[(i + 1) % 3].cross(P[(i + 2) % 3]).normalized();
    normals[i] = X.cross(pole).normalized();
    const Eigen::Vector3d foot = X - X.dot(pole) * pole;
    out.feet[i] = foot.normalized();
    const double along = sphere_distance(P[(i + 1) % 3], out.feet[i]) + sphere_distance(out.feet[i], P[(i + 2) % 3]);
    if (std::abs(along - R.side(i)) > 1e-9) throw InternalError("perpendicular foot outside the opposite side");
  }
  std::array<Eigen::Vector3d, 3> meets;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d h = normals[i].cross(normals[(i + 1) % 3]).normalized();
    if (h.dot(centroid) < 0) h = -h;
    meets[i] = h;
  }
  out.point = (meets[0] + meets[1] + meets[2]).normalized();
  for (int i = 0; i < 3; ++i) {
    out.concurrency = std::max(out.concurrency, sphere_distance(meets[i], meets[(i + 1) % 3]));
  }
  return out;
}

/// Unit-vector corners realizing R: A at the north pole, B in the xz-plane.
inline std::array<Eigen::Vector3d, 3> place_triangle(const SphericalTriangle& R) {
  const Eigen::Vector3d A(0, 0, 1);
  const Eigen::Vector3d B(std::sin(R.c()), 0, std::cos(R.c()));
  const Eigen::Vector3d C(std::sin(R.b()) * std::cos(R.A()), std::sin(R.b()) * std::sin(R.A()), std::cos(R.b()));
  return {A, B, C};
}

}  // namespace acute
