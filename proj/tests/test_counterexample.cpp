#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maniplex/corpus.hpp"
#include "maniplex/counterexample.hpp"
#include "maniplex/poset.hpp"
#include "oracles.hpp"

#include <map>

using namespace maniplex;

namespace {

const Maniplex& B() {
  static const Maniplex b = build_B();
  return b;
}

const BStar& Bstar() {
  static const BStar s = build_B_star();
  return s;
}

std::map<Flag, bool> primed_of_rank(const BConditionReport& r, int rank) {
  std::map<Flag, bool> out;
  for (const auto& [face, primed] : r.primed)
    if (face.rank == rank) out[face.component] = primed;
  return out;
}

} // namespace

TEST_CASE("the polytope B") {
  const Maniplex& b = B();
  CHECK(b.flag_count() == 96);
  CHECK(pos_of(b).face_vector() == std::vector<std::size_t>{4, 6, 6, 4});
  CHECK(oracle::face_vector(b) == std::vector<std::size_t>{4, 6, 6, 4});
  CHECK(is_faithful(b).faithful);
  CHECK(oracle::faithful(b));
  CHECK(is_polytopal(b));
  CHECK(oracle::diamond(b));
  AutomorphismInfo aut = automorphism_count(b);
  CHECK(aut.reflexible);
  CHECK(aut.count == 96);
  Certificate c = check_B(b);
  CHECK(c.all_pass());
  for (const char* name : {"B.flat", "B.facets_hemicube", "B.vertex_figures_hemioctahedron", "B.self_dual"})
    CHECK(c.find(name)->pass);
}

TEST_CASE("check_B rejects other maniplexes") {
  Maniplex simplex = coset_graph(coset_enumerate(string_presentation({3, 3, 3})));
  Certificate c = check_B(simplex);
  CHECK_FALSE(c.all_pass());
  CHECK_FALSE(c.find("B.flag_count")->pass);
  CHECK_FALSE(c.find("B.face_vector")->pass);
  CHECK_FALSE(check_B(platonic("cube")).find("B.valid")->pass);
}

TEST_CASE("superscripts apply left to right") {
  const Maniplex& b = B();
  for (Flag f = 0; f < b.flag_count(); ++f) {
    CHECK(shift(b, f, {0, 2}) == b.adj(2, b.adj(0, f)));
    CHECK(shift(b, f, {3, 1}) == b.adj(1, b.adj(3, f)));
    CHECK(shift(b, f, {}) == f);
  }
}

TEST_CASE("Theta") {
  const Maniplex& b = B();
  ThetaSet theta = find_theta(b);
  CHECK(theta.theta.size() == 6);
  CHECK(check_A_conditions(b, theta).all_pass());

  Components edges = face_components(b, 1);
  Components polygons = face_components(b, 2);
  std::set<std::size_t> used;
  for (std::size_t k = 0; k < theta.theta.size(); ++k) {
    CHECK(edges.index_of[theta.theta[k]] == k);
    used.insert(polygons.index_of[theta.theta[k]]);
  }
  CHECK(used.size() == 6);

  CHECK(find_theta(b).theta == theta.theta);
  CHECK_THROWS_AS(find_theta(platonic("cube")), std::invalid_argument);
}

TEST_CASE("Theta conditions are invariant under automorphisms") {
  const Maniplex& b = B();
  ThetaSet theta = find_theta(b);
  for (Flag g = 0; g < b.flag_count(); ++g) {
    auto phi = propagate(b, b, 0, g);
    REQUIRE(phi);
    ThetaSet image;
    for (Flag f : theta.theta) image.theta.push_back((*phi)[f]);
    CHECK(check_A_conditions(b, image).all_pass());
  }
}

TEST_CASE("condition checks catch a bad Theta") {
  const Maniplex& b = B();
  ThetaSet theta = find_theta(b);
  ThetaSet short_theta{{theta.theta.begin(), theta.theta.end() - 1}};
  CHECK_FALSE(check_A_conditions(b, short_theta).all_pass());
  ThetaSet doubled{theta.theta};
  doubled.theta.push_back(theta.theta.front());
  CHECK_THROWS_AS(build_E_theta(b, doubled), std::runtime_error);
}

TEST_CASE("E_Theta") {
  const Maniplex& b = B();
  ThetaSet theta = find_theta(b);
  EThetaSet e = build_E_theta(b, theta);
  CHECK(e.edges.size() == 24);
  CHECK(e.groups.size() == 6);
  for (std::size_t k = 0; k < theta.theta.size(); ++k) {
    Flag f = theta.theta[k];
    // Path f^31 -1- f^3 -3- f -0- f^0 -2- f^02.
    std::vector<Flag> path{shift(b, f, {3, 1}), shift(b, f, {3}), f, shift(b, f, {0}), shift(b, f, {0, 2})};
    std::vector<int> colours{1, 3, 0, 2};
    std::set<Edge> along;
    for (int s = 0; s < 4; ++s) {
      CHECK(b.adj(colours[s], path[s]) == path[s + 1]);
      along.insert(edge_at(b, path[s], colours[s]));
    }
    CHECK(along == std::set<Edge>(e.groups[k].begin(), e.groups[k].end()));
  }
  std::vector<int> incidence(b.flag_count(), 0);
  for (const Edge& edge : e.edges) {
    ++incidence[edge.lower];
    ++incidence[b.adj(edge.colour, edge.lower)];
  }
  CHECK(*std::max_element(incidence.begin(), incidence.end()) <= 2);
  VoltageAssignment z = e.voltage(b);
  CHECK(z.size() == 24);
  for (const Square& s : square_parities(b, z)) CHECK(s.even());
}

TEST_CASE("edge conditions") {
  const Maniplex& b = B();
  ThetaSet theta = find_theta(b);
  EThetaSet e = build_E_theta(b, theta);
  BConditionReport r = verify_B_conditions(b, theta, e);
  CHECK(r.checks.all_pass());
  CHECK(r.primed.size() == 8);

  Maniplex d = dual(b);
  CHECK(check_A_conditions(d, theta).all_pass());
  EThetaSet ed = build_E_theta(d, theta);
  CHECK(ed.edges.size() == 24);
  BConditionReport rd = verify_B_conditions(d, theta, ed);
  CHECK(rd.checks.all_pass());
  CHECK(primed_of_rank(r, 0) == primed_of_rank(rd, 3));
  CHECK(primed_of_rank(r, 3) == primed_of_rank(rd, 0));
}

TEST_CASE("face lifts under E_Theta") {
  const Maniplex& b = B();
  EThetaSet e = build_E_theta(b, find_theta(b));
  CHECK(check_face_lifts(b, e.voltage(b)).all_pass());
  CHECK_FALSE(check_face_lifts(b, VoltageAssignment{}).all_pass());
}

TEST_CASE("the double cover B*") {
  const BStar& s = Bstar();
  CHECK(s.certificate.all_pass());
  CHECK(s.b_star.flag_count() == 192);
  CHECK(validate(s.b_star).ok);
  CHECK_FALSE(is_faithful(s.b_star).faithful);
  CHECK_FALSE(oracle::faithful(s.b_star));
  CHECK(is_polytopal(s.b_star));
  CHECK(s.poset_iso);
  CHECK(poset_isomorphism(pos_of(s.b_star), pos_of(s.b)));
  CHECK(s.witness.second == s.witness.first + 1);
  CHECK(s.witness.first % 2 == 0);
  CHECK(pos_of(s.b_star).face_vector() == std::vector<std::size_t>{4, 6, 6, 4});

  FlagFunctionTable t = flag_function(s.b_star);
  for (const auto& fiber : t.fibers) {
    REQUIRE(fiber.size() == 2);
    CHECK(DoubleCover::project(fiber[0]) == DoubleCover::project(fiber[1]));
  }
}

TEST_CASE("projection maps faces of B* two-to-one onto faces of B") {
  const BStar& s = Bstar();
  for (int i = 0; i < 4; ++i) {
    Components up = face_components(s.b_star, i);
    Components down = face_components(s.b, i);
    CHECK(up.size() == down.size());
    for (const auto& members : up.members) {
      std::set<Flag> image;
      for (Flag g : members) image.insert(DoubleCover::project(g));
      CHECK(members.size() == 2 * image.size());
      const auto& target = down.members[down.index_of[*image.begin()]];
      CHECK(std::vector<Flag>(image.begin(), image.end()) == target);
    }
  }
}

TEST_CASE("cover certification fails for a bad voltage") {
  const Maniplex& b = B();
  ThetaSet theta = find_theta(b);
  EThetaSet bad;
  bad.edges.insert(edge_at(b, 0, 0));
  BStar s = certify_cover(b, theta, bad);
  CHECK_FALSE(s.certificate.all_pass());
  CHECK_FALSE(s.certificate.find("cover.valid")->pass);
  CHECK_FALSE(s.certificate.find("cover.squares_even")->pass);
}
