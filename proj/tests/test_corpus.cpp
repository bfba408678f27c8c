#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maniplex/corpus.hpp"
#include "maniplex/poset.hpp"
#include "oracles.hpp"

using namespace maniplex;

TEST_CASE("small tori") {
  Maniplex t10 = torus_44(1, 0);
  CHECK(t10.flag_count() == 8);
  CHECK(oracle::face_vector(t10) == std::vector<std::size_t>{1, 2, 1});
  Maniplex t11 = torus_44(1, 1);
  CHECK(t11.flag_count() == 16);
  CHECK(oracle::face_vector(t11) == std::vector<std::size_t>{2, 4, 2});
  CHECK(validate(torus_44(2, 0)).ok);
}

TEST_CASE("torus flag counts and face vectors") {
  for (int b = 0; b <= 4; ++b)
    for (int c = 0; c <= 4; ++c) {
      if (b == 0 && c == 0) continue;
      CAPTURE(b);
      CAPTURE(c);
      std::size_t n = b * b + c * c;
      Maniplex t = torus_44(b, c);
      CHECK(validate(t).ok);
      CHECK(t.flag_count() == 8 * n);
      CHECK(oracle::face_vector(t) == std::vector<std::size_t>{n, 2 * n, n});
      if (c == 0 || b == c) CHECK(automorphism_count(t).reflexible);
    }
}

TEST_CASE("torus flag numbering") {
  Maniplex t = torus_44(2, 1);
  // Flags 8*cell + 2*corner + side; sides swap inside a corner.
  for (Flag f = 0; f < t.flag_count(); ++f) CHECK(t.adj(1, f) == (f ^ 1u));
  CHECK_THROWS_AS(torus_44(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(torus_44(-1, 2), std::invalid_argument);
}

TEST_CASE("platonic maniplexes") {
  Maniplex cube = platonic("cube");
  CHECK(cube.flag_count() == 48);
  CHECK(oracle::faithful(cube));
  CHECK(is_polytopal(cube));
  Maniplex hemicube = platonic("hemicube");
  CHECK(hemicube.flag_count() == 24);
  CHECK(oracle::face_vector(hemicube) == std::vector<std::size_t>{4, 6, 3});
  Maniplex hemioct = platonic("hemioctahedron");
  CHECK(hemioct.flag_count() == 24);
  CHECK(isomorphic(dual(hemicube), hemioct));
  CHECK(oracle::face_vector(platonic("octahedron")) == std::vector<std::size_t>{6, 12, 8});
  CHECK(platonic("square").flag_count() == 8);
  CHECK_THROWS_AS(platonic("dodecahedron"), std::invalid_argument);
}

TEST_CASE("rank-3 corpus") {
  auto corpus = rank3_corpus();
  std::size_t tori = 0;
  for (const auto& [name, m] : corpus) {
    CAPTURE(name);
    CHECK(validate(m).ok);
    CHECK(m.rank() == 3);
    if (name.rfind("{4,4}", 0) == 0) ++tori;
  }
  // (b, c) with b, c >= 0 and 1 <= b^2 + c^2 <= 10.
  CHECK(tori == 12);
  CHECK(corpus.size() == 15);
}
