#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace acute;

namespace {

std::set<std::string> ids(const AbstractTriangulation& L, const std::vector<int>& vs) {
  std::set<std::string> out;
  for (int v : vs) out.insert(L.id(v));
  return out;
}

bool cycle_is_closed_walk(const AbstractTriangulation& L, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!L.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

}  // namespace

TEST(Oracle, BruteForceCountsMatch) {
  const auto expected = acute::testing::oracle("combinatorics_expected.json");
  ASSERT_GE(expected.size(), 17u);
  for (const auto& [name, e] : expected.items()) {
    const auto L = load_triangulation(acute::testing::fixture_path(name)).triangulation;
    SCOPED_TRACE(name);
    EXPECT_EQ(L.vertex_count(), e["vertices"].get<int>());
    EXPECT_EQ(L.edge_count(), e["edges"].get<int>());
    EXPECT_EQ(L.face_count(), e["faces"].get<int>());
    EXPECT_EQ(is_flag(L), e["flag"].get<bool>());
    EXPECT_EQ(find_four_clique(L).has_value(), e["four_clique"].get<bool>());
    int empty = 0;
    for (const auto& t : three_cycles(L)) empty += !L.has_face(t[0], t[1], t[2]);
    EXPECT_EQ(empty, e["empty_triangles"].get<int>());
    int chordless = 0;
    for (const auto& q : four_cycles(L)) chordless += !L.adjacent(q[0], q[2]) && !L.adjacent(q[1], q[3]);
    EXPECT_EQ(chordless, e["chordless_squares"].get<int>());
    EXPECT_EQ(static_cast<int>(separating_3_cycles(L).size()), e["separating_3_cycles"].get<int>());
    EXPECT_EQ(static_cast<int>(separating_4_cycles(L).size()), e["separating_4_cycles"].get<int>());
    if (L.is_closed()) {
      EXPECT_EQ(flag_no_square_by_cliques(L), e["flag_no_square_cliques"].get<bool>());
      EXPECT_EQ(flag_no_square_by_separation(L), e["flag_no_square_separation"].get<bool>());
    }
  }
}

TEST(Flag, Examples) {
  EXPECT_TRUE(is_flag(fixtures::icosahedron()));
  EXPECT_FALSE(is_flag(fixtures::tetrahedron()));
  EXPECT_EQ(find_four_clique(fixtures::tetrahedron())->kind, CycleKind::four_clique);
  EXPECT_TRUE(is_flag(fixtures::fig1a_double()));
  EXPECT_TRUE(is_flag(fixtures::octahedron()));
  const auto S = fixtures::subdivided_tetrahedron();
  EXPECT_FALSE(is_flag(S));
  const auto w = find_empty_triangle(S);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, CycleKind::empty_3_cycle);
  EXPECT_EQ(ids(S, w->cycle), (std::set<std::string>{"0", "1", "2"}));
}

TEST(ChordlessSquare, Examples) {
  const auto O = fixtures::octahedron();
  const auto w = has_chordless_square(O);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, CycleKind::chordless_4_cycle);
  EXPECT_EQ(w->cycle.size(), 4u);
  EXPECT_TRUE(cycle_is_closed_walk(O, w->cycle));
  EXPECT_FALSE(has_chordless_square(fixtures::icosahedron()).has_value());
  const auto D = fixtures::fig1a_double();
  const auto sq = has_chordless_square(D);
  ASSERT_TRUE(sq.has_value());
  EXPECT_TRUE(cycle_is_closed_walk(D, sq->cycle));
}

TEST(Separating, Examples) {
  EXPECT_TRUE(separating_cycles(fixtures::icosahedron()).empty());
  const auto D = fixtures::fig1a_double();
  const std::set<std::string> square{"x0", "x1", "x2", "x3"};
  bool found = false;
  for (const auto& w : separating_cycles(D)) {
    if (ids(D, w.cycle) == square) {
      found = true;
      EXPECT_EQ(w.kind, CycleKind::separating_4_cycle);
      EXPECT_EQ(w.components.size(), 2u);
      for (const auto& c : w.components) EXPECT_FALSE(c.empty());
    }
  }
  EXPECT_TRUE(found);
  const auto W = fixtures::square_wheel_double();
  const std::set<std::string> rim{"a0", "a1", "a2", "a3"};
  found = false;
  for (const auto& w : separating_cycles(W)) found = found || ids(W, w.cycle) == rim;
  EXPECT_TRUE(found);
}

TEST(Separating, WitnessInvariants) {
  for (const auto& name : fixtures::names()) {
    const auto L = fixtures::named(name);
    for (const auto& w : separating_cycles(L)) {
      EXPECT_TRUE(cycle_is_closed_walk(L, w.cycle)) << name;
      EXPECT_GE(w.components.size(), 2u) << name;
      std::set<int> seen(w.cycle.begin(), w.cycle.end());
      std::size_t total = w.cycle.size();
      for (const auto& c : w.components) {
        EXPECT_FALSE(c.empty()) << name;
        total += c.size();
        for (int v : c) EXPECT_TRUE(seen.insert(v).second) << name;
      }
      EXPECT_EQ(total, static_cast<std::size_t>(L.vertex_count())) << name;
    }
  }
}

TEST(FlagNoSquare, Examples) {
  EXPECT_TRUE(is_flag_no_square(fixtures::icosahedron()));
  EXPECT_TRUE(is_flag_no_square(fixtures::fig2a()));
  EXPECT_EQ(fixtures::fig2a().face_count(), 28);
  EXPECT_TRUE(is_flag_no_square(fixtures::fig2b()));
  EXPECT_EQ(fixtures::fig2b().face_count(), 34);
  EXPECT_FALSE(is_flag_no_square(fixtures::fig1a_double()));
  EXPECT_FALSE(is_flag_no_square(fixtures::fig1b_double()));
  EXPECT_FALSE(is_flag_no_square(fixtures::octahedron()));
  EXPECT_THROW(is_flag_no_square(fixtures::fig1a_disk()), PreconditionError);
}

TEST(FlagNoSquare, FormulationsAgreeOnCorpus) {
  for (const auto& name : fixtures::names()) {
    const auto L = fixtures::named(name);
    if (!L.is_closed()) continue;
    EXPECT_EQ(flag_no_square_by_cliques(L), flag_no_square_by_separation(L)) << name;
  }
}

TEST(FlagNoSquare, FormulationsAgreeOnRandomFlips) {
  std::mt19937_64 rng(11);
  for (const auto& name : {"icosahedron", "fig2a", "fig2b", "maehara_cap_double_5"}) {
    auto L = fixtures::named(name);
    for (int step = 0; step < 60; ++step) {
      std::uniform_int_distribution<int> pick(0, L.edge_count() - 1);
      const auto e = L.edges()[pick(rng)];
      try {
        L = diagonal_flip(L, e.first, e.second);
      } catch (const PreconditionError&) {
        continue;
      }
      EXPECT_EQ(flag_no_square_by_cliques(L), flag_no_square_by_separation(L)) << name << " step " << step;
    }
  }
}

TEST(FlagNoSeparatingSquare, Planar) {
  EXPECT_TRUE(is_flag_no_separating_square(fixtures::fig1a_disk()));
  EXPECT_TRUE(is_flag_no_separating_square(fixtures::fig1b_disk()));
  EXPECT_TRUE(is_flag_no_separating_square(square_wheel()));
  EXPECT_TRUE(is_flag_no_separating_square(fixtures::icosahedron()));
  EXPECT_FALSE(is_flag_no_separating_square(fixtures::fig1a_double()));
}

TEST(Obstruction, OrderAndKinds) {
  EXPECT_FALSE(combinatorial_obstruction(fixtures::icosahedron()).has_value());
  EXPECT_EQ(combinatorial_obstruction(fixtures::fig1a_double())->kind, CycleKind::separating_4_cycle);
  EXPECT_EQ(combinatorial_obstruction(fixtures::tetrahedron())->kind, CycleKind::four_clique);
  EXPECT_EQ(combinatorial_obstruction(fixtures::subdivided_tetrahedron())->kind, CycleKind::separating_3_cycle);
  EXPECT_EQ(describe(fixtures::fig1a_double(), *combinatorial_obstruction(fixtures::fig1a_double())),
            "separating-4-cycle (x0 x1 x2 x3)");
}

TEST(Itoh, Examples) {
  const std::map<int, bool> table{{20, true}, {22, false}, {24, true}, {28, true},
                                  {34, true}, {19, false}, {100, true}, {18, false}, {2, false}};
  for (const auto& [n, v] : table) EXPECT_EQ(itoh_face_predicate(n), v) << n;
  EXPECT_THROW(itoh_face_predicate(0), PreconditionError);
}

TEST(Itoh, FixturesWithAcuteVerdictHaveAdmissibleFaceCounts) {
  for (const auto& name : fixtures::names()) {
    const auto L = fixtures::named(name);
    if (L.is_closed() && is_flag_no_square(L)) EXPECT_TRUE(itoh_face_predicate(L.face_count())) << name;
  }
}

TEST(IdealAllRight, Examples) {
  EXPECT_TRUE(ideal_allright_conditions(fixtures::icosahedron()));
  EXPECT_FALSE(ideal_allright_conditions(fixtures::octahedron()));
  EXPECT_TRUE(ideal_allright_conditions(cap_planar(fixtures::fig1a_disk()).sphere));
  EXPECT_TRUE(ideal_allright_conditions(cap_planar(fixtures::fig1b_disk()).sphere));
  EXPECT_THROW(ideal_allright_conditions(fixtures::tetrahedron()), PreconditionError);
  EXPECT_THROW(ideal_allright_conditions(fixtures::fig1a_disk()), PreconditionError);
}

TEST(EmptyThreeCycle, Examples) {
  EXPECT_FALSE(empty_3cycle_obstruction(fixtures::fig1a_double()));
  EXPECT_TRUE(empty_3cycle_obstruction(fixtures::subdivided_tetrahedron()));
  EXPECT_FALSE(empty_3cycle_obstruction(fixtures::icosahedron()));
  EXPECT_FALSE(empty_3cycle_obstruction(fixtures::fig1a_disk()));
}

TEST(Coxeter, FaceFinite) {
  EXPECT_TRUE(coxeter_face_finite(2, 3, 5));
  EXPECT_FALSE(coxeter_face_finite(2, 3, 6));
  EXPECT_FALSE(coxeter_face_finite(3, 3, 3));
  for (int p = 2; p < 200; ++p) EXPECT_TRUE(coxeter_face_finite(2, 2, p));
  EXPECT_THROW(coxeter_face_finite(1, 2, 3), PreconditionError);
}

TEST(Coxeter, OneEnded) {
  const auto I = fixtures::icosahedron();
  EXPECT_TRUE(coxeter_one_ended(I, EdgeLabeling(I)));
  const auto T = fixtures::tetrahedron();
  EXPECT_FALSE(coxeter_one_ended(T, EdgeLabeling(T)));
  // Every 3-cycle of the Oum double bounds a face, so the right-angled group
  // is one-ended; its separating square obstructs hyperbolicity instead.
  const auto D = fixtures::fig1a_double();
  EXPECT_TRUE(coxeter_one_ended(D, EdgeLabeling(D)));
  EXPECT_FALSE(is_flag_no_square(D));
  const auto S = fixtures::subdivided_tetrahedron();
  const auto w = coxeter_one_ended_obstruction(S, EdgeLabeling(S));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(ids(S, w->cycle), (std::set<std::string>{"0", "1", "2"}));
}

TEST(Coxeter, OneEndedWithInfiniteTriangleOnEmptyCycle) {
  // Labels 3 on the empty triangle of the subdivided tetrahedron make that
  // 3-cycle generate an infinite group while every face stays finite.
  const auto S = fixtures::subdivided_tetrahedron();
  EdgeLabeling m(S);
  m.set(S, S.index_of("0"), S.index_of("1"), 3);
  m.set(S, S.index_of("1"), S.index_of("2"), 3);
  m.set(S, S.index_of("2"), S.index_of("0"), 3);
  EXPECT_TRUE(coxeter_one_ended(S, m));
}

TEST(Coxeter, InfiniteFaceIsPrecondition) {
  const auto I = fixtures::icosahedron();
  EdgeLabeling m(I);
  const auto& f = I.face(0);
  m.set(I, f[0], f[1], 3);
  m.set(I, f[1], f[2], 3);
  m.set(I, f[2], f[0], 3);
  EXPECT_THROW(coxeter_one_ended(I, m), PreconditionError);
}

TEST(Coxeter, AllRightAgreesWithFlagNoSquareWhenNoSquares) {
  for (const auto& name : fixtures::names()) {
    const auto L = fixtures::named(name);
    if (!L.is_closed() || has_chordless_square(L)) continue;
    EXPECT_EQ(coxeter_one_ended(L, EdgeLabeling(L)), is_flag_no_square(L)) << name;
  }
}

TEST(Tessellation, TwoTwoTwo) {
  const auto R = SphericalTriangle::from_sides(1.0, 1.1, 1.2);
  const auto t = tessellation_22p(R, 2);
  EXPECT_EQ(t.triangles, 8);
  ASSERT_EQ(t.vertices.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(t.vertices[i].cone_angle, 4 * R.angle(i), 1e-15);
}

TEST(Tessellation, StronglyObtuseExceedsTwoPi) {
  const auto R = polar_dual(SphericalTriangle::from_angles(2 * pi / 5, 2 * pi / 5, 2 * pi / 5));
  ASSERT_TRUE(is_strongly_obtuse(R));
  EXPECT_TRUE(tessellation_22p(R, 2).all_exceed_2pi);
}

TEST(Tessellation, FatterThanTwoTwoFive) {
  const auto base = SphericalTriangle::coxeter(5, 2, 2);
  const auto R = SphericalTriangle::from_angles(base.A() + 0.05, base.B() + 0.05, base.C() + 0.05);
  ASSERT_TRUE(fatter(R, base));
  const auto t = tessellation_22p(R, 5, 0);
  EXPECT_EQ(t.triangles, 20);
  EXPECT_GT(t.vertices[0].cone_angle, 2 * pi);
  EXPECT_NEAR(t.vertices[0].cone_angle, 10 * R.A(), 1e-14);
}
