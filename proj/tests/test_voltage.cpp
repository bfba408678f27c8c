#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maniplex/corpus.hpp"
#include "maniplex/voltage.hpp"

using namespace maniplex;

TEST_CASE("a triangle with one odd edge lifts to a hexagon") {
  SimpleGraph triangle{3, {{0, 1}, {1, 2}, {2, 0}}};
  SimpleGraph hex = double_cover(triangle, {0});
  CHECK(hex.vertices == 6);
  CHECK(hex.edges.size() == 6);
  CHECK(is_connected(hex));
  std::vector<int> degree(6, 0);
  for (auto [x, y] : hex.edges) {
    ++degree[x];
    ++degree[y];
  }
  for (int d : degree) CHECK(d == 2);

  SimpleGraph two = double_cover(triangle, {});
  CHECK_FALSE(is_connected(two));
  CHECK(is_connected(double_cover(triangle, {0, 1, 2})));
  CHECK_FALSE(is_connected(double_cover(triangle, {0, 1})));
}

TEST_CASE("edges are keyed by their lower endpoint") {
  Maniplex cube = platonic("cube");
  for (Flag f = 0; f < cube.flag_count(); ++f)
    for (int i = 0; i < 3; ++i) CHECK(edge_at(cube, f, i) == edge_at(cube, cube.adj(i, f), i));
  std::vector<Edge> bad{{999, 0}};
  CHECK_THROWS_AS(VoltageAssignment(cube, bad), std::invalid_argument);
  std::vector<Edge> bad_colour{{0, 3}};
  CHECK_THROWS_AS(VoltageAssignment(cube, bad_colour), std::invalid_argument);
  std::vector<Edge> both{{0, 1}, {cube.adj(1, 0), 1}};
  CHECK(VoltageAssignment(cube, both).size() == 1);
}

TEST_CASE("zero voltage gives two disjoint copies") {
  Maniplex cube = platonic("cube");
  DoubleCover dc = double_cover(cube, VoltageAssignment{});
  CHECK(dc.graph.flag_count() == 96);
  ValidationReport r = validate(dc.graph);
  CHECK(r.has(Axiom::Connected));
  CHECK_FALSE(r.has(Axiom::CommutingSquares));
  for (Flag g = 0; g < dc.graph.flag_count(); ++g)
    for (int i = 0; i < 3; ++i) {
      CHECK(DoubleCover::sheet(dc.graph.adj(i, g)) == DoubleCover::sheet(g));
      CHECK(DoubleCover::project(dc.graph.adj(i, g)) == cube.adj(i, DoubleCover::project(g)));
    }
  CoverReport report = cover_is_maniplex(cube, VoltageAssignment{});
  CHECK(report.not_cut_set);
  CHECK_FALSE(report.is_maniplex);
  CHECK(report.lemma_agrees);
}

TEST_CASE("an odd square breaks the cover") {
  Maniplex cube = platonic("cube");
  std::vector<Edge> one{edge_at(cube, 0, 0)};
  VoltageAssignment z(cube, one);
  auto squares = square_parities(cube, z);
  CHECK(squares.size() == 12);
  int odd = 0;
  for (const Square& s : squares) odd += !s.even();
  CHECK(odd == 1);
  CoverReport r = cover_is_maniplex(cube, z);
  CHECK_FALSE(r.squares_even);
  REQUIRE(r.odd_square);
  CHECK(r.odd_square->i == 0);
  CHECK(r.odd_square->j == 2);
  CHECK(r.direct.has(Axiom::CommutingSquares));
  CHECK_FALSE(r.is_maniplex);
  CHECK(r.lemma_agrees);
}

TEST_CASE("squares list flags in the documented order") {
  Maniplex cube = platonic("cube");
  for (const Square& s : square_parities(cube, VoltageAssignment{})) {
    CHECK(s.flags[1] == cube.adj(s.i, s.flags[0]));
    CHECK(s.flags[2] == cube.adj(s.j, s.flags[1]));
    CHECK(s.flags[3] == cube.adj(s.j, s.flags[0]));
    CHECK(s.flags[0] == *std::min_element(s.flags.begin(), s.flags.end()));
    CHECK(s.nontrivial() == 0);
  }
}

TEST_CASE("face lifts") {
  Maniplex cube = platonic("cube");
  Components facets = face_components(cube, 2);
  const auto& square = facets.members[0];
  std::vector<Edge> one{edge_at(cube, square[0], 0)};
  VoltageAssignment z(cube, one);
  CHECK(lift_connected(cube, z, square, ColorSet{0, 1}));
  CHECK_FALSE(lift_connected(cube, VoltageAssignment{}, square, ColorSet{0, 1}));
  std::vector<Flag> apart{0, cube.adj(0, cube.adj(1, cube.adj(2, 0)))};
  CHECK_THROWS_AS(lift_connected(cube, z, apart, ColorSet{0}), std::invalid_argument);
}

TEST_CASE("sheet swap is an automorphism of every cover") {
  Maniplex t = torus_44(2, 1);
  std::vector<Edge> some{edge_at(t, 0, 1), edge_at(t, 5, 2), edge_at(t, 17, 0)};
  DoubleCover dc = double_cover(t, VoltageAssignment(t, some));
  for (Flag g = 0; g < dc.graph.flag_count(); ++g)
    for (int i = 0; i < 3; ++i) CHECK(dc.graph.adj(i, g ^ 1u) == (dc.graph.adj(i, g) ^ 1u));
}
