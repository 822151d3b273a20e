#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "acute/errors.hpp"
#include "acute/predicates.hpp"
#include "acute/triangulation.hpp"

namespace acute {

/// Replaces the interior edge {u,v} by the other diagonal of the square
/// formed by its two faces.
inline AbstractTriangulation diagonal_flip(const AbstractTriangulation& L, int u, int v) {
  auto e = L.edge_index(u, v);
  if (!e) throw PreconditionError("no edge {" + L.id(u) + "," + L.id(v) + "}");
  if (L.is_boundary_edge(*e)) throw PreconditionError("cannot flip boundary edge {" + L.id(u) + "," + L.id(v) + "}");
  int fu = -1;
  int fv = -1;
  for (int f : L.edge_faces(*e)) {
    const auto& F = L.face(f);
    for (int k = 0; k < 3; ++k) {
      if (F[k] == u && F[(k + 1) % 3] == v) fu = f;
      if (F[k] == v && F[(k + 1) % 3] == u) fv = f;
    }
  }
  const int a = AbstractTriangulation::third_vertex(L.face(fu), u, v);
  const int b = AbstractTriangulation::third_vertex(L.face(fv), u, v);
  if (L.adjacent(a, b)) {
    throw PreconditionError("flip of {" + L.id(u) + "," + L.id(v) + "} would create a doubled edge {" + L.id(a) +
                            "," + L.id(b) + "}");
  }
  std::vector<Face> faces(L.faces().begin(), L.faces().end());
  faces[fu] = {u, b, a};
  faces[fv] = {b, v, a};
  return AbstractTriangulation(L.vertex_ids(), std::move(faces));
}

inline AbstractTriangulation diagonal_flip(const AbstractTriangulation& L, const std::string& u, const std::string& v) {
  return diagonal_flip(L, L.index_of(u), L.index_of(v));
}

/// Glues a mirror copy of a planar L along all of its boundary cycles.
/// Interior vertices of the copy get a trailing prime.
inline AbstractTriangulation double_surface(const AbstractTriangulation& L) {
  if (L.is_closed()) throw PreconditionError("double needs a triangulation with boundary");
  std::unordered_set<std::string> taken(L.vertex_ids().begin(), L.vertex_ids().end());
  std::vector<std::string> ids = L.vertex_ids();
  std::vector<int> mirror(L.vertex_count());
  for (int v = 0; v < L.vertex_count(); ++v) {
    if (L.is_boundary_vertex(v)) {
      mirror[v] = v;
      continue;
    }
    std::string name = L.id(v) + "'";
    while (taken.count(name) != 0) name += "'";
    taken.insert(name);
    mirror[v] = static_cast<int>(ids.size());
    ids.push_back(name);
  }
  std::vector<Face> faces(L.faces().begin(), L.faces().end());
  for (const auto& f : L.faces()) faces.push_back({mirror[f[0]], mirror[f[2]], mirror[f[1]]});
  return AbstractTriangulation(std::move(ids), std::move(faces));
}

namespace detail {

/// Faces of the 9n-triangle cap over the boundary cycle `rim`. New vertex
/// identifiers are appended to ids with the given prefix.
inline std::vector<Face> maehara_faces(const std::vector<int>& rim, const std::string& prefix,
                                       std::vector<std::string>& ids) {
  const int n = static_cast<int>(rim.size());
  auto add = [&](const std::string& name) {
    ids.push_back(prefix + name);
    return static_cast<int>(ids.size()) - 1;
  };
  std::vector<int> z(n), y(n), Z(n), Y(n);
  for (int i = 0; i < n; ++i) {
    z[i] = add("z" + std::to_string(i));
    y[i] = add("y" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    Z[i] = add("Z" + std::to_string(i));
    Y[i] = add("Y" + std::to_string(i));
  }
  const int o = add("o");
  auto at = [n](const std::vector<int>& ring, int i) { return ring[((i % n) + n) % n]; };
  std::vector<Face> faces;
  for (int i = 0; i < n; ++i) {
    faces.push_back({at(rim, i - 1), rim[i], z[i]});
    faces.push_back({rim[i], y[i], z[i]});
    faces.push_back({rim[i], at(z, i + 1), y[i]});
    faces.push_back({at(y, i - 1), z[i], Z[i]});
    faces.push_back({Z[i], z[i], Y[i]});
    faces.push_back({z[i], y[i], Y[i]});
    faces.push_back({Y[i], y[i], at(Z, i + 1)});
    faces.push_back({o, Z[i], Y[i]});
    faces.push_back({o, Y[i], at(Z, i + 1)});
  }
  return faces;
}

}  // namespace detail

/// Disk triangulation of an n-gon by 9n triangles: an outer strip on the
/// n-gon, two rings of 2n vertices and a central cone vertex "o".
/// Boundary vertices are "b0".."b{n-1}".
inline AbstractTriangulation maehara_cap(int n) {
  if (n < 5) throw PreconditionError("maehara_cap needs n >= 5, got " + std::to_string(n));
  std::vector<std::string> ids;
  std::vector<int> rim;
  for (int i = 0; i < n; ++i) {
    rim.push_back(i);
    ids.push_back("b" + std::to_string(i));
  }
  auto faces = detail::maehara_faces(rim, "", ids);
  AbstractTriangulation cap(std::move(ids), std::move(faces));
  if (cap.face_count() != 9 * n || cap.boundary_cycles().size() != 1 ||
      static_cast<int>(cap.boundary_cycles()[0].size()) != n) {
    throw InternalError("maehara cap has the wrong shape for n=" + std::to_string(n));
  }
  if (!is_flag_no_separating_square(cap)) {
    throw InternalError("maehara cap for n=" + std::to_string(n) + " is not flag with no separating square");
  }
  return cap;
}

/// Cone over a 4-cycle a0..a3 with apex "o".
inline AbstractTriangulation square_wheel() {
  std::vector<std::string> ids{"a0", "a1", "a2", "a3", "o"};
  std::vector<Face> faces{{4, 0, 1}, {4, 1, 2}, {4, 2, 3}, {4, 3, 0}};
  return AbstractTriangulation(std::move(ids), std::move(faces));
}

/// A planar triangulation closed up to a sphere: each boundary of length >= 5
/// receives a 9n-triangle cap, each square boundary a wheel. The original
/// vertices keep their indices and the original faces come first.
struct CappedSurface {
  AbstractTriangulation sphere;
  int original_vertices = 0;
  int original_faces = 0;
  /// Wheel apices. These carry radius zero in a circle pattern.
  std::vector<int> ideal;
  /// Apex of every 9n-triangle cap.
  std::vector<int> cap_centres;
};

inline CappedSurface cap_planar(const AbstractTriangulation& L) {
  if (L.is_closed()) {
    return CappedSurface{L, L.vertex_count(), L.face_count(), {}, {}};
  }
  std::vector<std::string> ids = L.vertex_ids();
  std::vector<Face> faces(L.faces().begin(), L.faces().end());
  std::vector<int> ideal;
  std::vector<int> centres;
  int k = 0;
  for (const auto& cyc : L.boundary_cycles()) {
    const std::string prefix = "#cap" + std::to_string(k++) + "/";
    if (cyc.size() == 3) throw PreconditionError("boundary 3-cycle cannot be capped");
    if (cyc.size() == 4) {
      ids.push_back(prefix + "o");
      const int o = static_cast<int>(ids.size()) - 1;
      for (int i = 0; i < 4; ++i) faces.push_back({o, cyc[i], cyc[(i + 1) % 4]});
      ideal.push_back(o);
    } else {
      auto cap = detail::maehara_faces(cyc, prefix, ids);
      faces.insert(faces.end(), cap.begin(), cap.end());
      centres.push_back(static_cast<int>(ids.size()) - 1);
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& s : ids) {
    if (!seen.insert(s).second) throw InputError("vertex identifier '" + s + "' collides with a generated cap vertex");
  }
  return CappedSurface{AbstractTriangulation(std::move(ids), std::move(faces)), L.vertex_count(), L.face_count(),
                       std::move(ideal), std::move(centres)};
}

}  // namespace acute
