#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "acute/errors.hpp"
#include "acute/triangulation.hpp"

namespace acute {

enum class CycleKind {
  empty_3_cycle,
  chordless_4_cycle,
  separating_3_cycle,
  separating_4_cycle,
  /// Four mutually adjacent vertices. Only the tetrahedron has one without
  /// also having an empty 3-cycle.
  four_clique,
};

inline const char* to_string(CycleKind k) {
  switch (k) {
    case CycleKind::empty_3_cycle: return "empty-3-cycle";
    case CycleKind::chordless_4_cycle: return "chordless-4-cycle";
    case CycleKind::separating_3_cycle: return "separating-3-cycle";
    case CycleKind::separating_4_cycle: return "separating-4-cycle";
    case CycleKind::four_clique: return "four-clique";
  }
  return "?";
}

/// A 3- or 4-cycle of the edge graph (in cyclic order) certifying a
/// combinatorial property. For separating kinds, components holds the vertex
/// sets of L minus the cycle.
struct CycleWitness {
  std::vector<int> cycle;
  CycleKind kind = CycleKind::empty_3_cycle;
  std::vector<std::vector<int>> components;
};

/// All 3-cliques {a<b<c}.
inline std::vector<std::array<int, 3>> three_cycles(const AbstractTriangulation& L) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < L.vertex_count(); ++a) {
    for (int b : L.neighbors(a)) {
      if (b <= a) continue;
      for (int c : L.neighbors(b)) {
        if (c <= b) continue;
        if (L.adjacent(a, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

/// All 4-cycles a-b-c-d-a, each listed once with a the smallest vertex and b < d.
inline std::vector<std::array<int, 4>> four_cycles(const AbstractTriangulation& L) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < L.vertex_count(); ++a) {
    const auto& na = L.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      int b = na[i];
      if (b <= a) continue;
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        int d = na[j];
        const auto& nb = L.neighbors(b);
        const auto& nd = L.neighbors(d);
        std::vector<int> common;
        std::set_intersection(nb.begin(), nb.end(), nd.begin(), nd.end(), std::back_inserter(common));
        for (int c : common) {
          if (c > a) out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

/// Connected components of the edge graph after deleting the given vertices.
inline std::vector<std::vector<int>> components_without(const AbstractTriangulation& L,
                                                        const std::vector<int>& removed) {
  std::vector<int> comp(L.vertex_count(), -1);
  for (int v : removed) comp[v] = -2;
  std::vector<std::vector<int>> out;
  for (int s = 0; s < L.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> queue{s};
    comp[s] = id;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      out[id].push_back(v);
      for (int w : L.neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline bool is_complete_graph(const AbstractTriangulation& L) {
  const long long n = L.vertex_count();
  return L.edge_count() == n * (n - 1) / 2;
}

inline std::optional<CycleWitness> find_empty_triangle(const AbstractTriangulation& L) {
  for (const auto& t : three_cycles(L)) {
    if (!L.has_face(t[0], t[1], t[2])) return CycleWitness{{t[0], t[1], t[2]}, CycleKind::empty_3_cycle, {}};
  }
  return std::nullopt;
}

inline std::optional<CycleWitness> find_four_clique(const AbstractTriangulation& L) {
  for (const auto& t : three_cycles(L)) {
    for (int d : L.neighbors(t[2])) {
      if (d > t[2] && L.adjacent(d, t[0]) && L.adjacent(d, t[1])) {
        return CycleWitness{{t[0], t[1], t[2], d}, CycleKind::four_clique, {}};
      }
    }
  }
  return std::nullopt;
}

/// Every 3-clique spans a face and there is no 4-clique.
inline bool is_flag(const AbstractTriangulation& L) {
  return !find_empty_triangle(L) && !find_four_clique(L);
}

inline std::optional<CycleWitness> has_chordless_square(const AbstractTriangulation& L) {
  for (const auto& q : four_cycles(L)) {
    if (!L.adjacent(q[0], q[2]) && !L.adjacent(q[1], q[3])) {
      return CycleWitness{{q[0], q[1], q[2], q[3]}, CycleKind::chordless_4_cycle, {}};
    }
  }
  return std::nullopt;
}

/// Separating 3-cycles of L, in enumeration order.
inline std::vector<CycleWitness> separating_3_cycles(const AbstractTriangulation& L) {
  std::vector<CycleWitness> out;
  for (const auto& t : three_cycles(L)) {
    std::vector<int> c{t[0], t[1], t[2]};
    auto comps = components_without(L, c);
    if (comps.size() >= 2) out.push_back({c, CycleKind::separating_3_cycle, std::move(comps)});
  }
  return out;
}

inline std::vector<CycleWitness> separating_4_cycles(const AbstractTriangulation& L) {
  std::vector<CycleWitness> out;
  for (const auto& q : four_cycles(L)) {
    std::vector<int> c{q[0], q[1], q[2], q[3]};
    auto comps = components_without(L, c);
    if (comps.size() >= 2) out.push_back({c, CycleKind::separating_4_cycle, std::move(comps)});
  }
  return out;
}

/// All 3- and 4-cycles whose removal leaves at least two components.
inline std::vector<CycleWitness> separating_cycles(const AbstractTriangulation& L) {
  auto out = separating_3_cycles(L);
  auto four = separating_4_cycles(L);
  out.insert(out.end(), std::make_move_iterator(four.begin()), std::make_move_iterator(four.end()));
  return out;
}

/// Clique/chord formulation.
inline bool flag_no_square_by_cliques(const AbstractTriangulation& L) {
  return is_flag(L) && !has_chordless_square(L);
}

/// Separating-cycle formulation. A complete graph is excluded separately, as
/// the tetrahedron has no separating cycle at all.
inline bool flag_no_square_by_separation(const AbstractTriangulation& L) {
  if (is_complete_graph(L)) return false;
  return separating_cycles(L).empty();
}

/// Flag and no chordless 4-cycle. Both formulations are evaluated and must agree.
inline bool is_flag_no_square(const AbstractTriangulation& L) {
  if (!L.is_closed()) throw PreconditionError("is_flag_no_square needs a closed triangulation");
  const bool a = flag_no_square_by_cliques(L);
  const bool b = flag_no_square_by_separation(L);
  if (a != b) {
    throw InternalError("flag no-square formulations disagree (cliques: " + std::string(a ? "true" : "false") +
                        ", separation: " + (b ? "true" : "false") + ")");
  }
  return a;
}

inline bool is_flag_no_separating_square(const AbstractTriangulation& L) {
  return is_flag(L) && separating_4_cycles(L).empty();
}

/// The first certificate that L is not flag no-square (closed) or not flag
/// with no separating square (planar). Empty when L passes.
inline std::optional<CycleWitness> combinatorial_obstruction(const AbstractTriangulation& L) {
  if (L.is_closed()) {
    auto s3 = separating_3_cycles(L);
    if (!s3.empty()) return s3.front();
    if (auto k = find_four_clique(L)) return k;
    auto s4 = separating_4_cycles(L);
    if (!s4.empty()) return s4.front();
    return std::nullopt;
  }
  if (auto e = find_empty_triangle(L)) return e;
  if (auto k = find_four_clique(L)) return k;
  auto s4 = separating_4_cycles(L);
  if (!s4.empty()) return s4.front();
  return std::nullopt;
}

/// An interior vertex of degree 4, reported through its link square. Its four
/// corner angles sum to 2*pi, so one of them is at least pi/2.
inline std::optional<CycleWitness> find_interior_degree_4_vertex(const AbstractTriangulation& L) {
  for (int v = 0; v < L.vertex_count(); ++v) {
    if (L.is_boundary_vertex(v) || L.degree(v) != 4) continue;
    return CycleWitness{L.ordered_link(v), CycleKind::chordless_4_cycle, {{v}}};
  }
  return std::nullopt;
}

/// Face counts of acute triangulations of the sphere: even, at least 20, not 22.
inline bool itoh_face_predicate(int n) {
  if (n < 1) throw PreconditionError("face count must be positive");
  return n % 2 == 0 && n >= 20 && n != 22;
}

/// Conditions for an ideal all-right realization: every chordless 4-cycle
/// cuts off a single vertex, and no two degree-4 vertices are adjacent.
inline bool ideal_allright_conditions(const AbstractTriangulation& L) {
  if (!L.is_closed()) throw PreconditionError("ideal_allright_conditions needs a closed triangulation");
  if (!is_flag(L)) throw PreconditionError("ideal_allright_conditions needs a flag triangulation");
  for (const auto& q : four_cycles(L)) {
    if (L.adjacent(q[0], q[2]) || L.adjacent(q[1], q[3])) continue;
    auto comps = components_without(L, {q[0], q[1], q[2], q[3]});
    bool single = std::any_of(comps.begin(), comps.end(), [](const auto& c) { return c.size() == 1; });
    if (!single) return false;
  }
  for (const auto& e : L.edges()) {
    if (L.degree(e.first) == 4 && L.degree(e.second) == 4) return false;
  }
  return true;
}

/// An empty 3-cycle none of whose edges lies on the boundary.
inline std::optional<CycleWitness> find_interior_empty_3_cycle(const AbstractTriangulation& L) {
  for (const auto& t : three_cycles(L)) {
    if (L.has_face(t[0], t[1], t[2])) continue;
    bool interior = true;
    for (int k = 0; k < 3; ++k) {
      if (L.is_boundary_edge(*L.edge_index(t[k], t[(k + 1) % 3]))) interior = false;
    }
    if (interior) return CycleWitness{{t[0], t[1], t[2]}, CycleKind::empty_3_cycle, {}};
  }
  return std::nullopt;
}

inline bool empty_3cycle_obstruction(const AbstractTriangulation& L) {
  return find_interior_empty_3_cycle(L).has_value();
}

inline std::string describe(const AbstractTriangulation& L, const CycleWitness& w) {
  std::string s = to_string(w.kind);
  s += " (";
  for (std::size_t i = 0; i < w.cycle.size(); ++i) {
    if (i > 0) s += " ";
    s += L.id(w.cycle[i]);
  }
  return s + ")";
}

}  // namespace acute
