#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "acute/duality.hpp"
#include "acute/predicates.hpp"
#include "acute/realization.hpp"
#include "acute/slanted_cube.hpp"

namespace acute {

/// Rounds to 15 significant digits for reports.
inline double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline nlohmann::json json_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round15(x);
}

inline nlohmann::json to_json(const AbstractTriangulation& L, const CycleWitness& w) {
  nlohmann::json j;
  j["kind"] = to_string(w.kind);
  auto cyc = nlohmann::json::array();
  for (int v : w.cycle) cyc.push_back(L.id(v));
  j["cycle"] = cyc;
  if (!w.components.empty()) {
    auto comps = nlohmann::json::array();
    for (const auto& c : w.components) {
      auto arr = nlohmann::json::array();
      for (int v : c) arr.push_back(L.id(v));
      comps.push_back(arr);
    }
    j["components"] = comps;
  }
  return j;
}

inline nlohmann::json to_json(const SphericalTriangle& R) {
  return {{"angles", {json_number(R.A()), json_number(R.B()), json_number(R.C())}},
          {"sides", {json_number(R.a()), json_number(R.b()), json_number(R.c())}}};
}

inline nlohmann::json to_json(const DualityWitness& w) {
  return {{"x", json_number(w.x)},
          {"y", json_number(w.y)},
          {"z", json_number(w.z)},
          {"R", to_json(w.R)},
          {"target", to_json(w.target)},
          {"map", w.map.map},
          {"residuals", {json_number(w.residuals[0]), json_number(w.residuals[1]), json_number(w.residuals[2])}}};
}

inline nlohmann::json to_json(const AbsenceReport& a) {
  return {{"reason", a.reason},
          {"grid_step", json_number(a.step)},
          {"grid_points", a.points},
          {"interval", {json_number(a.interval_lo), json_number(a.interval_hi)}},
          {"residual_range", {json_number(a.residual_min), json_number(a.residual_max)}},
          {"monotone_on_grid", a.monotone},
          {"endpoint_limits", {json_number(a.limit_lo), json_number(a.limit_hi)}},
          {"max_grid_increment", json_number(a.max_increment)}};
}

inline nlohmann::json to_json(const SlantedCubeModel& m) {
  static const char* names[8] = {"O", "X", "Y", "Z", "X'", "Y'", "Z'", "O'"};
  nlohmann::json pts;
  for (int i = 0; i < 8; ++i) {
    pts[names[i]] = {json_number(m.points[i].x()), json_number(m.points[i].y()), json_number(m.points[i].z())};
  }
  auto lengths = nlohmann::json::array();
  for (const auto& e : SlantedCubeModel::edges()) {
    lengths.push_back({{"edge", {names[e[0]], names[e[1]]}}, {"length", json_number(m.edge_length(e[0], e[1]))}});
  }
  return {{"klein_coordinates", pts},
          {"edge_lengths", lengths},
          {"link_O", to_json(m.link_O)},
          {"link_O'", to_json(m.link_Op)},
          {"link_error", json_number(m.link_error)},
          {"right_angle_error", json_number(m.right_angle_error)},
          {"right_angles_checked", m.right_angles_checked}};
}

inline nlohmann::json to_json(const GeodesicRealization& T) {
  const auto& S = T.parent;
  auto verts = nlohmann::json::array();
  for (int v = 0; v < S.vertex_count(); ++v) {
    const auto& p = T.positions[v];
    verts.push_back({{"id", S.id(v)},
                     {"position", {json_number(p.x()), json_number(p.y()), json_number(p.z())}},
                     {"radius", json_number(T.radii[v])},
                     {"ideal", static_cast<bool>(T.ideal[v])},
                     {"original", v < T.scope_vertices}});
  }
  auto faces = nlohmann::json::array();
  for (const auto& f : S.faces()) faces.push_back({S.id(f[0]), S.id(f[1]), S.id(f[2])});
  return {{"vertices", verts}, {"faces", faces}, {"scope_faces", T.scope_faces}};
}

/// OFF mesh of the realized scope faces on the unit sphere.
inline std::string to_off(const GeodesicRealization& T) {
  std::ostringstream out;
  out.precision(15);
  out << "OFF\n" << T.parent.vertex_count() << " " << T.scope_faces.size() << " 0\n";
  for (const auto& p : T.positions) out << p.x() << " " << p.y() << " " << p.z() << "\n";
  for (int f : T.scope_faces) {
    const auto& F = T.parent.face(f);
    out << "3 " << F[0] << " " << F[1] << " " << F[2] << "\n";
  }
  return out.str();
}

/// Stereographic drawing from the pole `from`: edges, optional circles, and
/// a highlighted cycle in red.
inline std::string to_svg(const AbstractTriangulation& S, const std::vector<Eigen::Vector3d>& pos,
                          const std::vector<double>* radii, const Eigen::Vector3d& from,
                          const std::vector<int>& highlight = {}) {
  const Eigen::Matrix3d Q =
      Eigen::Quaterniond::FromTwoVectors(from.normalized(), Eigen::Vector3d(0, 0, 1)).toRotationMatrix();
  std::vector<Eigen::Vector2d> P(S.vertex_count());
  for (int v = 0; v < S.vertex_count(); ++v) {
    const Eigen::Vector3d q = Q * pos[v];
    P[v] = Eigen::Vector2d(q.x(), q.y()) / std::max(1e-9, 1 - q.z());
  }
  double extent = 1e-9;
  for (const auto& p : P) extent = std::max(extent, p.cwiseAbs().maxCoeff());
  const double scale = 380.0 / extent;
  auto X = [&](const Eigen::Vector2d& p) { return 400 + scale * p.x(); };
  auto Y = [&](const Eigen::Vector2d& p) { return 400 - scale * p.y(); };
  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  if (radii != nullptr) {
    for (int v = 0; v < S.vertex_count(); ++v) {
      const Eigen::Vector3d n = Q * pos[v];
      const double h = std::cos((*radii)[v]);
      const double d = h - n.z();
      if (std::abs(d) < 1e-9) continue;
      const Eigen::Vector2d c = Eigen::Vector2d(n.x(), n.y()) / d;
      const double r = std::sqrt(std::max(0.0, 1 - h * h)) / std::abs(d);
      out << "<circle cx=\"" << X(c) << "\" cy=\"" << Y(c) << "\" r=\"" << scale * r
          << "\" fill=\"none\" stroke=\"#7a9cc6\" stroke-width=\"0.8\"/>\n";
    }
  }
  for (const auto& e : S.edges()) {
    out << "<line x1=\"" << X(P[e.first]) << "\" y1=\"" << Y(P[e.first]) << "\" x2=\"" << X(P[e.second])
        << "\" y2=\"" << Y(P[e.second]) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t i = 0; i < highlight.size(); ++i) {
    const auto& a = P[highlight[i]];
    const auto& b = P[highlight[(i + 1) % highlight.size()]];
    out << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b)
        << "\" stroke=\"red\" stroke-width=\"3\"/>\n";
  }
  for (int v = 0; v < S.vertex_count(); ++v) {
    out << "<circle cx=\"" << X(P[v]) << "\" cy=\"" << Y(P[v]) << "\" r=\"2.5\" fill=\"black\"><title>" << S.id(v)
        << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

/// Pole for drawing a closed surface: the centroid direction of face 0, so
/// that face becomes the unbounded region.
inline Eigen::Vector3d drawing_pole(const AbstractTriangulation& S, const std::vector<Eigen::Vector3d>& pos) {
  const auto& f = S.face(0);
  return (pos[f[0]] + pos[f[1]] + pos[f[2]]).normalized();
}

}  // namespace acute
