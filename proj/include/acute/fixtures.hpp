#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "acute/constructions.hpp"
#include "acute/errors.hpp"
#include "acute/triangulation.hpp"

namespace acute::fixtures {

inline AbstractTriangulation tetrahedron() {
  return AbstractTriangulation({"0", "1", "2", "3"}, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}});
}

/// Tetrahedron with face {0,1,2} coned off to a new vertex "4".
inline AbstractTriangulation subdivided_tetrahedron() {
  return AbstractTriangulation({"0", "1", "2", "3", "4"},
                               {{4, 0, 1}, {4, 1, 2}, {4, 2, 0}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}});
}

/// Poles "n", "s" and equator "e0".."e3".
inline AbstractTriangulation octahedron() {
  std::vector<std::string> ids{"n", "s", "e0", "e1", "e2", "e3"};
  std::vector<Face> faces;
  for (int i = 0; i < 4; ++i) {
    int a = 2 + i;
    int b = 2 + (i + 1) % 4;
    faces.push_back({0, a, b});
    faces.push_back({1, b, a});
  }
  return AbstractTriangulation(std::move(ids), std::move(faces));
}

/// Poles "t", "b"; upper ring "u0".."u4"; lower ring "l0".."l4".
inline AbstractTriangulation icosahedron() {
  std::vector<std::string> ids{"t"};
  for (int i = 0; i < 5; ++i) ids.push_back("u" + std::to_string(i));
  for (int i = 0; i < 5; ++i) ids.push_back("l" + std::to_string(i));
  ids.push_back("b");
  auto u = [](int i) { return 1 + (i % 5); };
  auto l = [](int i) { return 6 + (i % 5); };
  std::vector<Face> faces;
  for (int i = 0; i < 5; ++i) {
    faces.push_back({0, u(i), u(i + 1)});
    faces.push_back({u(i), l(i), u(i + 1)});
    faces.push_back({u(i + 1), l(i), l(i + 1)});
    faces.push_back({11, l(i + 1), l(i)});
  }
  return AbstractTriangulation(std::move(ids), std::move(faces));
}

namespace detail {

inline AbstractTriangulation from_named(std::vector<std::string> ids,
                                        const std::vector<std::array<std::string, 3>>& faces) {
  return AbstractTriangulation::from_ids(std::move(ids), faces);
}

/// Faces of a flag planar graph are exactly its 3-cliques.
inline AbstractTriangulation from_flag_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  std::vector<Face> faces;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!adj[a][b]) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (adj[a][c] && adj[b][c]) faces.push_back({a - 1, b - 1, c - 1});
      }
    }
  }
  return AbstractTriangulation(std::move(ids), std::move(faces));
}

}  // namespace detail

/// Disk bounded by the square x0..x3 around a centred pentagon
/// configuration: center "z", inner ring "q0".."q4", outer ring "p0".."p4".
inline AbstractTriangulation fig1a_disk() {
  std::vector<std::string> ids{"z"};
  for (int i = 0; i < 5; ++i) ids.push_back("q" + std::to_string(i));
  for (int i = 0; i < 5; ++i) ids.push_back("p" + std::to_string(i));
  for (int i = 0; i < 4; ++i) ids.push_back("x" + std::to_string(i));
  auto q = [](int i) { return "q" + std::to_string(i % 5); };
  auto p = [](int i) { return "p" + std::to_string(i % 5); };
  std::vector<std::array<std::string, 3>> faces;
  for (int i = 0; i < 5; ++i) {
    faces.push_back({"z", q(i), q(i + 1)});
    faces.push_back({p(i), p(i + 1), q(i)});
    faces.push_back({q(i), q(i + 1), p(i + 1)});
  }
  // p_k sits at 90+72k degrees, x0..x3 at 135, 225, 315, 45 degrees.
  const std::vector<std::array<std::string, 3>> outer{
      {"x0", "p0", "p1"}, {"x0", "p1", "x1"}, {"x1", "p1", "p2"}, {"x1", "p2", "x2"}, {"x2", "p2", "p3"},
      {"x2", "p3", "p4"}, {"x2", "p4", "x3"}, {"x3", "p4", "p0"}, {"x3", "p0", "x0"}};
  faces.insert(faces.end(), outer.begin(), outer.end());
  return detail::from_named(std::move(ids), faces);
}

/// Disk bounded by the square x0..x3 around a hexagon p0..p5 split by the
/// edge q0-q1.
inline AbstractTriangulation fig1b_disk() {
  std::vector<std::string> ids{"q0", "q1"};
  for (int i = 0; i < 6; ++i) ids.push_back("p" + std::to_string(i));
  for (int i = 0; i < 4; ++i) ids.push_back("x" + std::to_string(i));
  const std::vector<std::array<std::string, 3>> faces{
      {"q0", "p4", "p5"}, {"q0", "p5", "p0"}, {"q0", "p0", "p1"}, {"q0", "p1", "q1"}, {"q1", "p1", "p2"},
      {"q1", "p2", "p3"}, {"q1", "p3", "p4"}, {"q0", "q1", "p4"}, {"x0", "p5", "p0"}, {"x0", "p0", "x1"},
      {"x1", "p0", "p1"}, {"x1", "p1", "p2"}, {"x1", "p2", "x2"}, {"x2", "p2", "p3"}, {"x2", "p3", "x3"},
      {"x3", "p3", "p4"}, {"x3", "p4", "p5"}, {"x3", "p5", "x0"}};
  return detail::from_named(std::move(ids), faces);
}

inline AbstractTriangulation fig1a_double() { return double_surface(fig1a_disk()); }
inline AbstractTriangulation fig1b_double() { return double_surface(fig1b_disk()); }

/// Flag no-square sphere with 16 vertices and 28 faces.
inline AbstractTriangulation fig2a() {
  return detail::from_flag_edges(
      16, {{16, 11}, {16, 15}, {16, 14}, {16, 13}, {16, 12}, {15, 9}, {15, 14}, {15, 11}, {15, 10}, {14, 7}, {14, 13},
           {14, 9},  {14, 8},  {13, 6},  {13, 12}, {13, 7},  {12, 5}, {12, 11}, {12, 6},  {11, 4},  {11, 10}, {11, 5},
           {10, 3},  {10, 9},  {10, 4},  {9, 3},   {9, 8},   {8, 2},  {8, 7},   {8, 3},   {7, 2},   {7, 6},   {6, 1},
           {6, 5},   {6, 2},   {5, 1},   {5, 4},   {4, 1},   {4, 3},  {3, 1},   {3, 2},   {2, 1}});
}

/// Flag no-square sphere with 19 vertices and 34 faces.
inline AbstractTriangulation fig2b() {
  return detail::from_flag_edges(
      19, {{19, 12}, {19, 18}, {19, 17}, {19, 16}, {19, 13}, {18, 10}, {18, 17}, {18, 12}, {18, 11}, {17, 8},  {17, 16},
           {17, 10}, {17, 9},  {16, 8},  {16, 15}, {16, 13}, {15, 7},  {15, 14}, {15, 13}, {15, 8},  {14, 5},  {14, 13},
           {14, 7},  {14, 6},  {13, 5},  {13, 12}, {12, 5},  {12, 11}, {11, 4},  {11, 10}, {11, 5},  {10, 4},  {10, 9},
           {9, 3},   {9, 8},   {9, 4},   {8, 2},   {8, 7},   {8, 3},   {7, 2},   {7, 6},   {6, 1},   {6, 5},   {6, 2},
           {5, 1},   {5, 4},   {4, 1},   {4, 3},   {3, 1},   {3, 2},   {2, 1}});
}

inline AbstractTriangulation square_wheel_double() { return double_surface(square_wheel()); }

/// Names accepted by named().
inline std::vector<std::string> names() {
  return {"tetrahedron",    "subdivided_tetrahedron", "octahedron",     "icosahedron",     "square_wheel",
          "square_wheel_double", "fig1a_disk",       "fig1b_disk",     "fig1a_double",    "fig1b_double",
          "fig2a",          "fig2b",                  "maehara_cap_5",  "maehara_cap_6",   "maehara_cap_7",
          "maehara_cap_8",  "maehara_cap_double_5",   "maehara_cap_double_6", "maehara_cap_double_7",
          "maehara_cap_double_8"};
}

inline AbstractTriangulation named(const std::string& name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "subdivided_tetrahedron") return subdivided_tetrahedron();
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "square_wheel") return square_wheel();
  if (name == "square_wheel_double") return square_wheel_double();
  if (name == "fig1a_disk") return fig1a_disk();
  if (name == "fig1b_disk") return fig1b_disk();
  if (name == "fig1a_double") return fig1a_double();
  if (name == "fig1b_double") return fig1b_double();
  if (name == "fig2a") return fig2a();
  if (name == "fig2b") return fig2b();
  const std::string cap = "maehara_cap_";
  const std::string dbl = "maehara_cap_double_";
  try {
    if (name.rfind(dbl, 0) == 0) return double_surface(maehara_cap(std::stoi(name.substr(dbl.size()))));
    if (name.rfind(cap, 0) == 0) return maehara_cap(std::stoi(name.substr(cap.size())));
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace acute::fixtures
