#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acute/errors.hpp"
#include "acute/predicates.hpp"
#include "acute/spherical.hpp"
#include "acute/triangulation.hpp"

namespace acute {

/// The triangle group with labels p,q,r is finite iff 1/p + 1/q + 1/r > 1.
inline bool coxeter_face_finite(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2) throw PreconditionError("Coxeter labels must be >= 2");
  return static_cast<long long>(q) * r + static_cast<long long>(p) * r + static_cast<long long>(p) * q >
         static_cast<long long>(p) * q * r;
}

/// Labels (p,q,r) of face f: p on the edge opposite corner 0, and so on.
inline std::array<int, 3> face_labels(const AbstractTriangulation& L, const EdgeLabeling& m, int f) {
  const auto& F = L.face(f);
  return {m.at(L, F[1], F[2]), m.at(L, F[2], F[0]), m.at(L, F[0], F[1])};
}

/// A 3-cycle that spans no face yet carries a finite triangle group, or the
/// whole vertex set when the graph is complete. Empty when C(L) is one-ended.
inline std::optional<CycleWitness> coxeter_one_ended_obstruction(const AbstractTriangulation& L,
                                                                 const EdgeLabeling& m) {
  if (!L.is_closed()) throw PreconditionError("coxeter_one_ended needs a closed triangulation");
  for (int f = 0; f < L.face_count(); ++f) {
    auto [p, q, r] = face_labels(L, m, f);
    if (!coxeter_face_finite(p, q, r)) {
      const auto& F = L.face(f);
      throw PreconditionError("face {" + L.id(F[0]) + "," + L.id(F[1]) + "," + L.id(F[2]) +
                              "} induces an infinite triangle group");
    }
  }
  if (is_complete_graph(L)) {
    std::vector<int> all(L.vertex_count());
    for (int v = 0; v < L.vertex_count(); ++v) all[v] = v;
    return CycleWitness{all, CycleKind::four_clique, {}};
  }
  for (const auto& t : three_cycles(L)) {
    if (L.has_face(t[0], t[1], t[2])) continue;
    if (coxeter_face_finite(m.at(L, t[1], t[2]), m.at(L, t[2], t[0]), m.at(L, t[0], t[1]))) {
      return CycleWitness{{t[0], t[1], t[2]}, CycleKind::empty_3_cycle, {}};
    }
  }
  return std::nullopt;
}

/// Every 3-cycle either bounds a face or carries an infinite triangle group,
/// and the graph is not complete.
inline bool coxeter_one_ended(const AbstractTriangulation& L, const EdgeLabeling& m) {
  return !coxeter_one_ended_obstruction(L, m).has_value();
}

struct ConeVertexClass {
  int corner = 0;
  int count = 0;
  double cone_angle = 0;
};

/// Summary of the (2,2,p)-tessellation by 4p copies of R.
struct Tessellation22p {
  int triangles = 0;
  std::vector<ConeVertexClass> vertices;
  bool all_exceed_2pi = false;
};

/// The corner `apex` of R carries the label p; the other two carry 2.
inline Tessellation22p tessellation_22p(const SphericalTriangle& R, int p, int apex = 0) {
  if (p < 2) throw PreconditionError("p must be >= 2");
  if (apex < 0 || apex > 2) throw PreconditionError("apex must be a corner index");
  Tessellation22p t;
  t.triangles = 4 * p;
  t.all_exceed_2pi = true;
  for (int i = 0; i < 3; ++i) {
    ConeVertexClass v;
    v.corner = i;
    if (i == apex) {
      v.count = 2;
      v.cone_angle = 2.0 * p * R.angle(i);
    } else {
      v.count = p;
      v.cone_angle = 4.0 * R.angle(i);
    }
    t.all_exceed_2pi = t.all_exceed_2pi && v.cone_angle > 2 * pi;
    t.vertices.push_back(v);
  }
  return t;
}

}  // namespace acute
