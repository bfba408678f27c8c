#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maniplex/corpus.hpp"
#include "maniplex/poset.hpp"
#include "oracles.hpp"

using namespace maniplex;

namespace {

// Two digons sharing nothing: diamond holds, flag connectivity fails.
RankedPoset two_digons() {
  std::vector<int> ranks{-1, 0, 0, 0, 0, 1, 1, 1, 1, 2};
  std::vector<std::string> labels{"min", "a", "b", "c", "d", "ab1", "ab2", "cd1", "cd2", "max"};
  std::vector<std::pair<int, int>> hasse{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5},
                                         {1, 6}, {2, 6}, {3, 7}, {4, 7}, {3, 8}, {4, 8},
                                         {5, 9}, {6, 9}, {7, 9}, {8, 9}};
  return RankedPoset(2, ranks, labels, hasse);
}

} // namespace

TEST_CASE("malformed posets are rejected") {
  CHECK_THROWS_AS(RankedPoset(1, {-1, 0, 1}, {"a", "a", "b"}, {{0, 1}, {1, 2}}), MalformedPoset);
  CHECK_THROWS_AS(RankedPoset(1, {-1, 1}, {"a", "b"}, {{0, 1}}), MalformedPoset);
  CHECK_THROWS_AS(RankedPoset(1, {-1, 0, 0, 1}, {"a", "b", "c", "d"}, {{0, 3}}), MalformedPoset);
  CHECK_THROWS_AS(RankedPoset(1, {-1, 0, 2}, {"a", "b", "c"}, {{0, 1}}), MalformedPoset);
  CHECK_THROWS_AS(RankedPoset(1, {-1, 0, 1}, {"a", "b", "c"}, {{0, 7}}), MalformedPoset);
}

TEST_CASE("order of Pos(M) is flag-set intersection") {
  for (const auto& [name, m] : rank3_corpus()) {
    CAPTURE(name);
    FacePoset fp = face_poset(m);
    const RankedPoset& p = fp.poset;
    CHECK(p.face_vector() == oracle::face_vector(m));
    CHECK(p.label(p.minimum()) == "F-1");
    CHECK(p.label(p.maximum()) == "F3");
    for (int a = 0; a < static_cast<int>(p.size()); ++a)
      for (int b = 0; b < static_cast<int>(p.size()); ++b) {
        int ra = p.face_rank(a), rb = p.face_rank(b);
        bool expected = ra == -1 || rb == 3 ||
                        (ra <= rb && rb < 3 && ra >= 0 &&
                         (a == b || (ra < rb && oracle::meets(fp.members[a], fp.members[b]))));
        CHECK(p.leq(a, b) == expected);
      }
  }
}

TEST_CASE("flag function and faithfulness agree with the pairwise oracle") {
  for (const auto& [name, m] : rank3_corpus()) {
    CAPTURE(name);
    FaithfulnessResult r = is_faithful(m);
    CHECK(r.faithful == oracle::faithful(m));
    CHECK(r.witness.has_value() == !r.faithful);
    FlagFunctionTable t = flag_function(m);
    std::size_t total = 0;
    for (const auto& fiber : t.fibers) total += fiber.size();
    CHECK(total == m.flag_count());
  }
  CHECK_FALSE(is_faithful(torus_44(1, 0)).faithful);
  CHECK(is_faithful(torus_44(1, 1)).faithful);
}

TEST_CASE("polytope axioms on known cases") {
  CHECK(is_polytopal(platonic("cube")));
  CHECK(is_polytopal(platonic("hemicube")));
  CHECK(is_polytopal(platonic("hemioctahedron")));
  CHECK_FALSE(is_polytopal(torus_44(1, 0)));
  CHECK_FALSE(is_polytopal(torus_44(1, 1)));
  CHECK(is_polytopal(torus_44(3, 0)));
  for (const auto& [name, m] : rank3_corpus()) {
    CAPTURE(name);
    CHECK(check_diamond(pos_of(m)).ok == oracle::diamond(m));
  }

  RankedPoset digons = two_digons();
  CHECK(check_diamond(digons).ok);
  PolytopeCheck sfc = check_strong_flag_connectivity(digons);
  CHECK_FALSE(sfc.ok);
  CHECK(is_polytope(digons).failed == PolytopeAxiom::StrongFlagConnectivity);
  CHECK(is_polytope(digons, {false}).ok);

  RankedPoset three(1, {-1, 0, 0, 0, 1}, {"m", "a", "b", "c", "M"},
                    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(is_polytope(three).failed == PolytopeAxiom::Diamond);

  RankedPoset loose(1, {-1, 0, 0, 1}, {"m", "a", "b", "M"}, {{0, 1}, {1, 3}, {2, 3}});
  CHECK(check_bounded(loose).failed == PolytopeAxiom::Bounded);
}

TEST_CASE("chains, sections and flag graphs") {
  RankedPoset cube = pos_of(platonic("cube"));
  CHECK(maximal_chains(cube).size() == 48);
  int facet = cube.faces_of_rank(2).front();
  RankedPoset square = section(cube, cube.minimum(), facet);
  CHECK(square.rank() == 2);
  CHECK(square.face_vector() == std::vector<std::size_t>{4, 4});
  CHECK(maximal_chains(square).size() == 8);
  CHECK_THROWS_AS(section(cube, facet, cube.minimum()), std::invalid_argument);

  CHECK(isomorphic(flag_graph_of(cube), platonic("cube")));
  CHECK_THROWS_AS(flag_graph_of(RankedPoset(1, {-1, 0, 0, 0, 1}, {"m", "a", "b", "c", "M"},
                                            {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})),
                  DiamondFailure);
}

TEST_CASE("order duality and poset isomorphism") {
  RankedPoset cube = pos_of(platonic("cube"));
  RankedPoset oct = pos_of(platonic("octahedron"));
  CHECK(poset_isomorphism(order_dual(cube), oct));
  CHECK_FALSE(poset_isomorphism(cube, oct));
  CHECK(poset_isomorphism(pos_of(platonic("hemicube")), order_dual(pos_of(platonic("hemioctahedron")))));
  auto iso = poset_isomorphism(cube, cube);
  REQUIRE(iso);
  for (auto [lo, hi] : cube.hasse()) CHECK(cube.less((*iso)[lo], (*iso)[hi]));
}

TEST_CASE("rank-3 theorems over the corpus") {
  Rank3Report r = rank3_theorems(rank3_corpus());
  CHECK(r.ok());
  for (const auto& e : r.entries) {
    CAPTURE(e.name);
    if (!e.faithful) {
      CHECK_FALSE(e.polytopal);
      CHECK(e.pair0);
      CHECK(e.pair2);
    }
  }
  CHECK_THROWS_AS(rank3_theorems({{"square", platonic("square")}}), std::invalid_argument);
}
