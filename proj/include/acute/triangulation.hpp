#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "acute/errors.hpp"

namespace acute {

/// Unordered vertex pair, stored with first < second.
struct Edge {
  int first = 0;
  int second = 0;

  Edge() = default;
  Edge(int u, int v) : first(std::min(u, v)), second(std::max(u, v)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Face = std::array<int, 3>;

namespace detail {

inline std::uint64_t edge_key(int u, int v) {
  auto a = static_cast<std::uint64_t>(std::min(u, v));
  auto b = static_cast<std::uint64_t>(std::max(u, v));
  return (a << 32) | b;
}

inline Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace detail

/// A pure-combinatorics triangulation of the 2-sphere or of a compact planar
/// surface (a sphere with finitely many open disks removed).
///
/// Vertices carry opaque string identifiers; internally they are dense indices
/// in the order given at construction. Faces are stored consistently oriented;
/// the first face keeps the orientation it was given with. Construction
/// validates every invariant and throws InvariantError naming the offending
/// simplex. Instances are immutable.
class AbstractTriangulation {
 public:
  AbstractTriangulation(std::vector<std::string> vertex_ids, std::vector<Face> faces)
      : ids_(std::move(vertex_ids)), faces_(std::move(faces)) {
    build();
  }

  /// Builds from identifier triples. Unknown identifiers are InputErrors.
  static AbstractTriangulation from_ids(std::vector<std::string> vertex_ids,
                                        const std::vector<std::array<std::string, 3>>& faces) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(vertex_ids.size()); ++i) {
      if (!index.emplace(vertex_ids[i], i).second) {
        throw InputError("duplicate vertex identifier '" + vertex_ids[i] + "'");
      }
    }
    std::vector<Face> indexed;
    indexed.reserve(faces.size());
    for (const auto& f : faces) {
      Face g{};
      for (int k = 0; k < 3; ++k) {
        auto it = index.find(f[k]);
        if (it == index.end()) throw InputError("face references unknown vertex '" + f[k] + "'");
        g[k] = it->second;
      }
      indexed.push_back(g);
    }
    return AbstractTriangulation(std::move(vertex_ids), std::move(indexed));
  }

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& id(int v) const { return ids_.at(v); }

  int index_of(std::string_view vertex_id) const {
    auto it = index_.find(std::string(vertex_id));
    if (it == index_.end()) throw InputError("unknown vertex '" + std::string(vertex_id) + "'");
    return it->second;
  }
  bool has_vertex(std::string_view vertex_id) const {
    return index_.count(std::string(vertex_id)) != 0;
  }

  std::span<const Face> faces() const { return faces_; }
  const Face& face(int f) const { return faces_.at(f); }
  std::span<const Edge> edges() const { return edges_; }

  /// Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool adjacent(int u, int v) const {
    return u != v && edge_index_.count(detail::edge_key(u, v)) != 0;
  }

  std::optional<int> edge_index(int u, int v) const {
    auto it = edge_index_.find(detail::edge_key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Indices of the faces containing the edge (1 or 2 entries).
  const std::vector<int>& edge_faces(int e) const { return edge_faces_.at(e); }

  bool is_boundary_edge(int e) const { return edge_faces_.at(e).size() == 1; }

  bool is_boundary_vertex(int v) const { return boundary_vertex_.at(v); }

  bool has_face(int a, int b, int c) const {
    return face_set_.count(detail::sorted_face({a, b, c})) != 0;
  }

  /// Faces incident to a vertex.
  const std::vector<int>& vertex_faces(int v) const { return vertex_faces_.at(v); }

  bool is_closed() const { return boundary_cycles_.empty(); }

  /// Boundary components as vertex cycles, each starting at its
  /// lexicographically smallest identifier and continuing toward the smaller
  /// of that vertex's two boundary neighbors.
  const std::vector<std::vector<int>>& boundary_cycles() const { return boundary_cycles_; }

  /// Cyclically ordered link of an interior vertex, following face
  /// orientation. For a boundary vertex the link is a path from one boundary
  /// neighbor to the other.
  std::vector<int> ordered_link(int v) const {
    // Each incident face (v, a, b) in orientation contributes the directed link edge a -> b.
    std::unordered_map<int, int> next;
    std::unordered_map<int, int> indegree;
    for (int f : vertex_faces_.at(v)) {
      auto [a, b] = opposite_directed(faces_[f], v);
      next[a] = b;
      indegree[b] += 1;
    }
    int start = next.begin()->first;
    for (const auto& [a, b] : next) {
      if (indegree.count(a) == 0) {
        start = a;
        break;
      }
    }
    std::vector<int> out{start};
    int cur = start;
    while (next.count(cur) != 0) {
      cur = next.at(cur);
      if (cur == start) break;
      out.push_back(cur);
    }
    return out;
  }

  /// Canonical form used for equality: sorted list of sorted face triples
  /// over identifiers.
  std::vector<std::array<std::string, 3>> canonical_faces() const {
    std::vector<std::array<std::string, 3>> out;
    out.reserve(faces_.size());
    for (const auto& f : faces_) {
      std::array<std::string, 3> t{ids_[f[0]], ids_[f[1]], ids_[f[2]]};
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool same_combinatorics(const AbstractTriangulation& other) const {
    auto a = ids_;
    auto b = other.ids_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && canonical_faces() == other.canonical_faces();
  }

  /// The two other vertices of face f in orientation order after v.
  static std::pair<int, int> opposite_directed(const Face& f, int v) {
    if (f[0] == v) return {f[1], f[2]};
    if (f[1] == v) return {f[2], f[0]};
    return {f[0], f[1]};
  }

  /// Vertex of face f not on edge {u, v}.
  static int third_vertex(const Face& f, int u, int v) {
    for (int w : f) {
      if (w != u && w != v) return w;
    }
    return -1;
  }

 private:
  std::string simplex_name(std::initializer_list<int> vs) const {
    std::string s = "{";
    bool first = true;
    for (int v : vs) {
      if (!first) s += ",";
      s += ids_.at(v);
      first = false;
    }
    return s + "}";
  }

  void build() {
    const int n = vertex_count();
    if (n == 0 || faces_.empty()) throw InvariantError("empty triangulation");
    for (int i = 0; i < n; ++i) {
      if (!index_.emplace(ids_[i], i).second) {
        throw InputError("duplicate vertex identifier '" + ids_[i] + "'");
      }
    }
    for (const auto& f : faces_) {
      for (int v : f) {
        if (v < 0 || v >= n) throw InputError("face references vertex index out of range");
      }
      if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
        throw InvariantError("face with repeated vertices " + simplex_name({f[0], f[1], f[2]}));
      }
      if (!face_set_.insert(detail::sorted_face(f)).second) {
        throw InvariantError("repeated face " + simplex_name({f[0], f[1], f[2]}));
      }
    }

    adjacency_.assign(n, {});
    vertex_faces_.assign(n, {});
    for (int fi = 0; fi < face_count(); ++fi) {
      const auto& f = faces_[fi];
      for (int k = 0; k < 3; ++k) {
        int u = f[k];
        int v = f[(k + 1) % 3];
        auto key = detail::edge_key(u, v);
        auto [it, inserted] = edge_index_.emplace(key, static_cast<int>(edges_.size()));
        if (inserted) {
          edges_.emplace_back(u, v);
          edge_faces_.emplace_back();
          adjacency_[u].push_back(v);
          adjacency_[v].push_back(u);
        }
        edge_faces_[it->second].push_back(fi);
        vertex_faces_[u].push_back(fi);
      }
    }
    for (int e = 0; e < edge_count(); ++e) {
      if (edge_faces_[e].size() > 2) {
        throw InvariantError("non-manifold edge " + simplex_name({edges_[e].first, edges_[e].second}) +
                             " lies in " + std::to_string(edge_faces_[e].size()) + " faces");
      }
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

    boundary_vertex_.assign(n, false);
    for (int e = 0; e < edge_count(); ++e) {
      if (edge_faces_[e].size() == 1) {
        boundary_vertex_[edges_[e].first] = true;
        boundary_vertex_[edges_[e].second] = true;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (vertex_faces_[v].empty()) throw InvariantError("isolated vertex " + simplex_name({v}));
      check_link(v);
    }
    check_connected();
    orient();
    trace_boundary();

    const int expected = 2 - static_cast<int>(boundary_cycles_.size());
    if (euler_characteristic() != expected) {
      throw InvariantError("Euler characteristic " + std::to_string(euler_characteristic()) +
                           " does not match a planar surface with " +
                           std::to_string(boundary_cycles_.size()) + " boundary components (expected " +
                           std::to_string(expected) + ")");
    }
  }

  // Link of an interior vertex must be one cycle, of a boundary vertex one path.
  void check_link(int v) {
    std::unordered_map<int, std::vector<int>> link;
    for (int f : vertex_faces_[v]) {
      int a = -1;
      int b = -1;
      for (int w : faces_[f]) {
        if (w == v) continue;
        (a < 0 ? a : b) = w;
      }
      link[a].push_back(b);
      link[b].push_back(a);
    }
    int endpoints = 0;
    for (const auto& [w, nb] : link) {
      if (nb.size() == 1) {
        ++endpoints;
      } else if (nb.size() != 2) {
        throw InvariantError("non-manifold vertex " + simplex_name({v}) + ": link is not a cycle or path");
      }
    }
    const bool boundary = boundary_vertex_[v];
    if ((boundary && endpoints != 2) || (!boundary && endpoints != 0)) {
      throw InvariantError("non-manifold vertex " + simplex_name({v}) + ": link is not a cycle or path");
    }
    // Connectedness of the link.
    std::vector<int> stack{link.begin()->first};
    std::unordered_map<int, bool> seen{{stack.back(), true}};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int x : link[w]) {
        if (!seen[x]) {
          seen[x] = true;
          stack.push_back(x);
        }
      }
    }
    std::size_t reached = 0;
    for (const auto& [w, s] : seen) reached += s ? 1 : 0;
    if (reached != link.size()) {
      throw InvariantError("non-manifold vertex " + simplex_name({v}) + ": link is disconnected");
    }
  }

  void check_connected() const {
    std::vector<bool> seen(vertex_count(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != vertex_count()) throw InvariantError("triangulation is disconnected");
  }

  static bool has_directed(const Face& f, int u, int v) {
    for (int k = 0; k < 3; ++k) {
      if (f[k] == u && f[(k + 1) % 3] == v) return true;
    }
    return false;
  }

  void orient() {
    std::vector<int> state(face_count(), 0);  // 0 unvisited, 1 fixed
    std::queue<int> q;
    state[0] = 1;
    q.push(0);
    while (!q.empty()) {
      int fi = q.front();
      q.pop();
      const Face f = faces_[fi];
      for (int k = 0; k < 3; ++k) {
        int u = f[k];
        int v = f[(k + 1) % 3];
        int e = edge_index_.at(detail::edge_key(u, v));
        for (int g : edge_faces_[e]) {
          if (g == fi) continue;
          // Neighbor must traverse the shared edge as v -> u.
          if (state[g] == 0) {
            if (has_directed(faces_[g], u, v)) std::swap(faces_[g][1], faces_[g][2]);
            state[g] = 1;
            q.push(g);
          } else if (has_directed(faces_[g], u, v)) {
            throw InvariantError("non-orientable surface at edge " + simplex_name({u, v}));
          }
        }
      }
    }
  }

  void trace_boundary() {
    std::unordered_map<int, std::vector<int>> bnb;
    for (int e = 0; e < edge_count(); ++e) {
      if (edge_faces_[e].size() == 1) {
        bnb[edges_[e].first].push_back(edges_[e].second);
        bnb[edges_[e].second].push_back(edges_[e].first);
      }
    }
    std::vector<int> verts;
    for (const auto& [v, nb] : bnb) {
      if (nb.size() != 2) {
        throw InvariantError("boundary vertex " + simplex_name({v}) + " has " + std::to_string(nb.size()) +
                             " boundary edges");
      }
      verts.push_back(v);
    }
    // Visit boundary vertices in identifier order so each cycle starts at its minimum.
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return ids_[a] < ids_[b]; });
    std::unordered_map<int, bool> used;
    for (int start : verts) {
      if (used[start]) continue;
      const auto& nb = bnb[start];
      int next = ids_[nb[0]] < ids_[nb[1]] ? nb[0] : nb[1];
      std::vector<int> cycle{start};
      used[start] = true;
      int prev = start;
      int cur = next;
      while (cur != start) {
        cycle.push_back(cur);
        used[cur] = true;
        const auto& cn = bnb[cur];
        int nxt = cn[0] == prev ? cn[1] : cn[0];
        prev = cur;
        cur = nxt;
      }
      boundary_cycles_.push_back(std::move(cycle));
    }
  }

  std::vector<std::string> ids_;
  std::vector<Face> faces_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::vector<std::vector<int>> edge_faces_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<bool> boundary_vertex_;
  std::set<Face> face_set_;
  std::vector<std::vector<int>> boundary_cycles_;
};

/// Edge labels m(e) >= 2 defining the Coxeter group W(L, m). Edges without an
/// explicit label carry 2.
class EdgeLabeling {
 public:
  explicit EdgeLabeling(const AbstractTriangulation& tri) : labels_(tri.edge_count(), 2) {}

  void set(const AbstractTriangulation& tri, int u, int v, int m) {
    auto e = tri.edge_index(u, v);
    if (!e) throw InputError("label for non-edge {" + tri.id(u) + "," + tri.id(v) + "}");
    if (m < 2) throw InputError("edge label must be >= 2, got " + std::to_string(m));
    labels_[*e] = m;
  }

  int at(int edge) const { return labels_.at(edge); }
  int at(const AbstractTriangulation& tri, int u, int v) const {
    auto e = tri.edge_index(u, v);
    if (!e) throw PreconditionError("no edge {" + tri.id(u) + "," + tri.id(v) + "}");
    return labels_[*e];
  }

  bool all_right() const {
    return std::all_of(labels_.begin(), labels_.end(), [](int m) { return m == 2; });
  }
  std::span<const int> values() const { return labels_; }

 private:
  std::vector<int> labels_;
};

}  // namespace acute
