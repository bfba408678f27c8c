#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maniplex/corpus.hpp"
#include "maniplex/counterexample.hpp"
#include "maniplex/coxeter.hpp"

#include <map>

using namespace maniplex;

namespace {

const BStar& Bstar() {
  static const BStar s = build_B_star();
  return s;
}

} // namespace

TEST_CASE("words act from the right") {
  Maniplex cube = platonic("cube");
  for (Flag f = 0; f < cube.flag_count(); ++f) {
    CHECK(act(cube, CoxeterWord{}, f) == f);
    CHECK(act(cube, CoxeterWord({0, 1}), f) == cube.adj(0, cube.adj(1, f)));
    for (int i = 0; i < 3; ++i) CHECK(act(cube, CoxeterWord({i, i}), f) == f);
    CHECK(act(cube, CoxeterWord({0, 2, 0, 2}), f) == f);
  }
  CHECK_THROWS_AS(act(cube, CoxeterWord({3}), 0), std::out_of_range);
  CHECK_THROWS_AS(CoxeterWord({-1}), std::invalid_argument);
}

TEST_CASE("relators of the presentation act trivially on B") {
  const Maniplex& b = Bstar().b;
  for (const Word& r : p_presentation().relators) {
    CoxeterWord w(r);
    for (Flag f = 0; f < b.flag_count(); ++f) CHECK(act(b, w, f) == f);
  }
}

TEST_CASE("reduction") {
  CHECK(CoxeterWord({1, 1}).reduced().empty());
  CHECK(CoxeterWord({0, 2, 0}).reduced() == CoxeterWord({2}));
  CHECK(CoxeterWord({0, 1, 0}).reduced() == CoxeterWord({0, 1, 0}));
  CHECK(CoxeterWord({3, 0, 1, 1, 0, 3}).reduced().empty());
  CHECK(CoxeterWord({0, 1}).inverse() == CoxeterWord({1, 0}));
  CHECK((CoxeterWord({0}) * CoxeterWord({1, 2})) == CoxeterWord({0, 1, 2}));
  CHECK(CoxeterWord({0, 1}).to_string() == "r0r1");
  CHECK(CoxeterWord{}.to_string() == "1");
}

TEST_CASE("stabilizer membership") {
  const BStar& s = Bstar();
  Maniplex cube = platonic("cube");
  CHECK(in_stabilizer(cube, 0, CoxeterWord{}));
  for (int i = 0; i < 3; ++i) CHECK(in_stabilizer(cube, 5, CoxeterWord({i, i})));
  SchreierReport rep = schreier_correspondence(s.b_star, 0);
  const CoxeterWord& swap = rep.words[1];
  CHECK_FALSE(in_stabilizer(s.b_star, 0, swap));
  CHECK(in_stabilizer(s.b, 0, swap));
}

TEST_CASE("Schreier correspondence") {
  const BStar& s = Bstar();
  SchreierReport b = schreier_correspondence(s.b, 0);
  CHECK(b.ok());
  CHECK(b.words.size() == 96);
  SchreierReport bs = schreier_correspondence(s.b_star, 0);
  CHECK(bs.ok());
  CHECK(bs.words.size() == 192);
  SchreierReport e = schreier_correspondence(Maniplex(1, {{1, 0}}), 0);
  CHECK(e.ok());
  CHECK(e.words == std::vector<CoxeterWord>{CoxeterWord{}, CoxeterWord({0})});
}

TEST_CASE("Schreier words are shortlex-least") {
  Maniplex cube = platonic("cube");
  SchreierReport r = schreier_correspondence(cube, 0);
  // Every word up to length 9 in shortlex order; the first hit per flag wins.
  std::map<Flag, CoxeterWord> first;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= 9; ++len) {
    std::sort(layer.begin(), layer.end());
    for (const auto& w : layer) first.emplace(act(cube, CoxeterWord(w), 0), CoxeterWord(w));
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int i = 0; i < 3; ++i) {
        auto v = w;
        v.push_back(i);
        next.push_back(v);
      }
    layer = std::move(next);
  }
  CHECK(first.size() == 48);
  for (const auto& [f, w] : first) CHECK(r.words[f] == w);
}

TEST_CASE("verdicts") {
  const BStar& s = Bstar();
  Verdict b = verdict(s.b, 0);
  CHECK(b.sparse);
  CHECK(b.semisparse);
  CHECK_FALSE(b.chain_stabilizer_gap);

  Verdict bs = verdict(s.b_star, 0);
  CHECK(bs.sparse);
  CHECK_FALSE(bs.semisparse);
  REQUIRE(bs.unfaithful_pair);
  REQUIRE(bs.chain_stabilizer_gap);
  CHECK(act(s.b_star, *bs.chain_stabilizer_gap, 0) == 1);
  CHECK(act(s.b, *bs.chain_stabilizer_gap, 0) == 0);

  CHECK_FALSE(verdict(torus_44(1, 1), 0).sparse);
  for (const auto& [name, m] : rank3_corpus()) {
    CAPTURE(name);
    Verdict v = verdict(m, 0);
    CHECK(v.semisparse == v.sparse);
  }
}

TEST_CASE("double-coset labels") {
  const BStar& s = Bstar();
  Verdict v = verdict(s.b_star, 0);
  const RankedPoset& p = v.double_coset_poset;
  CHECK(p.face_vector() == std::vector<std::size_t>{4, 6, 6, 4});
  CHECK(p.label(p.minimum()) == "F-1");
  for (int r = 0; r < 4; ++r)
    for (int face : p.faces_of_rank(r)) CHECK(p.label(face).rfind("W" + std::to_string(r), 0) == 0);
  CHECK(p.label(p.faces_of_rank(0).front()) == "W0 N");
  CHECK(poset_isomorphism(p, pos_of(s.b_star)));
}
