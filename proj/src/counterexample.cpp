#include "maniplex/counterexample.hpp"

#include "maniplex/corpus.hpp"
#include "maniplex/coxeter.hpp"
#include "maniplex/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace maniplex {

namespace {

constexpr int kRank = 4;

nlohmann::json face_json(int rank, Flag id) { return nlohmann::json{{"rank", rank}, {"face", id}}; }

} // namespace

Presentation p_presentation() {
  return string_presentation({4, 3, 4}, {power({0, 1, 2}, 3), power({1, 2, 3}, 3)});
}

Certificate check_B(const Maniplex& b) {
  Certificate c;
  c.add("B.flag_count", b.flag_count() == 96, b.flag_count());
  ValidationReport v = validate(b);
  c.add("B.valid", v.ok && b.rank() == kRank);
  if (!v.ok || b.rank() != kRank) return c;

  FacePoset fp = face_poset(b);
  const RankedPoset& p = fp.poset;
  auto fv = p.face_vector();
  c.add("B.face_vector", fv == std::vector<std::size_t>{4, 6, 6, 4}, fv);

  bool flat = true;
  nlohmann::json flat_witness;
  for (int v0 : p.faces_of_rank(0))
    for (int f3 : p.faces_of_rank(3))
      if (flat && !p.leq(v0, f3)) {
        flat = false;
        flat_witness = {p.label(v0), p.label(f3)};
      }
  c.add("B.flat", flat, flat_witness);

  auto sections_match = [&](int rank, ColorSet colours, const Maniplex& model) {
    Components comps = face_components(b, rank);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      Maniplex part = restrict_to(b, comps.members[k], colours);
      if (!isomorphic(part, model)) return nlohmann::json(face_json(rank, comps.ids[k]));
    }
    return nlohmann::json();
  };
  nlohmann::json bad_facet = sections_match(3, ColorSet{0, 1, 2}, platonic("hemicube"));
  c.add("B.facets_hemicube", bad_facet.is_null(), bad_facet);
  nlohmann::json bad_vertex = sections_match(0, ColorSet{1, 2, 3}, platonic("hemioctahedron"));
  c.add("B.vertex_figures_hemioctahedron", bad_vertex.is_null(), bad_vertex);

  AutomorphismInfo aut = automorphism_count(b);
  c.add("B.reflexible", aut.reflexible && aut.count == 96, aut.count);
  c.add("B.self_dual", isomorphic(dual(b), b).has_value());

  FaithfulnessResult faith = is_faithful(flag_function(fp));
  nlohmann::json fw;
  if (faith.witness) fw = {faith.witness->first, faith.witness->second};
  c.add("B.faithful", faith.faithful, fw);
  PolytopeCheck poly = is_polytope(p);
  c.add("B.polytopal", poly.ok, poly.ok ? nlohmann::json() : nlohmann::json(poly.detail));
  return c;
}

Maniplex build_B() {
  Maniplex b = coset_graph(coset_enumerate(p_presentation()));
  require(check_B(b));
  return b;
}

Flag shift(const Maniplex& m, Flag f, const std::vector<int>& superscript) {
  for (int i : superscript) f = m.adj(i, f);
  return f;
}

std::set<Flag> ThetaSet::shifted(const Maniplex& b, const std::vector<int>& superscript) const {
  std::set<Flag> out;
  for (Flag f : theta) out.insert(shift(b, f, superscript));
  return out;
}

bool ThetaSet::contains(Flag f) const {
  return std::find(theta.begin(), theta.end(), f) != theta.end();
}

Certificate check_A_conditions(const Maniplex& b, const ThetaSet& theta) {
  Certificate c;
  std::vector<Components> comps;
  for (int i = 0; i < kRank; ++i) comps.push_back(face_components(b, i));

  nlohmann::json one_bad, count_bad, pair_bad, single_bad;
  for (int i = 0; i < kRank; ++i) {
    std::set<Flag> shifted = theta.shifted(b, {i});
    std::vector<std::vector<Flag>> inside(comps[i].size());
    std::vector<int> shifted_count(comps[i].size(), 0);
    for (Flag f : theta.theta) inside[comps[i].index_of[f]].push_back(f);
    for (Flag f : shifted) ++shifted_count[comps[i].index_of[f]];

    for (std::size_t k = 0; k < comps[i].size(); ++k) {
      nlohmann::json where = face_json(i, comps[i].ids[k]);
      const auto& in = inside[k];
      if (i == 1 || i == 2) {
        if (in.size() != 1 && one_bad.is_null()) one_bad = where;
        continue;
      }
      if (in.size() != 1 && in.size() != 2) {
        if (count_bad.is_null()) count_bad = where;
        continue;
      }
      if (in.size() == 2) {
        bool separated = shifted_count[k] == 1;
        for (int j = 0; j < kRank; ++j)
          if (j != i && comps[j].id_of[in[0]] == comps[j].id_of[in[1]]) separated = false;
        if (!separated && pair_bad.is_null()) pair_bad = where;
      } else if (shifted_count[k] != 2 && single_bad.is_null()) {
        single_bad = where;
      }
    }
  }
  c.add("theta.size", theta.theta.size() == comps[1].size(), theta.theta.size());
  c.add("theta.one_per_1_and_2_face", one_bad.is_null(), one_bad);
  c.add("theta.one_or_two_per_0_and_3_face", count_bad.is_null(), count_bad);
  c.add("theta.pairs_separated", pair_bad.is_null(), pair_bad);
  c.add("theta.singles_two_shifted", single_bad.is_null(), single_bad);
  return c;
}

VoltageAssignment EThetaSet::voltage(const Maniplex& b) const {
  std::vector<Edge> list(edges.begin(), edges.end());
  return VoltageAssignment(b, list);
}

EThetaSet build_E_theta(const Maniplex& b, const ThetaSet& theta) {
  EThetaSet e;
  for (Flag f : theta.theta) {
    Flag f0 = b.adj(0, f);
    Flag f3 = b.adj(3, f);
    std::array<Edge, 4> group{edge_at(b, f, 0), edge_at(b, f0, 2), edge_at(b, f, 3),
                              edge_at(b, f3, 1)};
    for (const Edge& edge : group)
      if (!e.edges.insert(edge).second)
        throw std::runtime_error("edge groups overlap at flag " + std::to_string(edge.lower) +
                                 " colour " + std::to_string(edge.colour));
    e.groups.push_back(group);
  }
  return e;
}

Certificate check_face_lifts(const Maniplex& b, const VoltageAssignment& z) {
  Certificate c;
  for (int i = 0; i < b.rank(); ++i) {
    Components comps = face_components(b, i);
    nlohmann::json bad;
    for (std::size_t k = 0; k < comps.size() && bad.is_null(); ++k)
      if (!lift_connected(b, z, comps.members[k], ColorSet::all_but(b.rank(), i)))
        bad = face_json(i, comps.ids[k]);
    c.add("lift.connected_" + std::to_string(i) + "_faces", bad.is_null(), bad);
  }
  return c;
}

namespace {

bool theta_admissible(const Maniplex& b, const ThetaSet& theta) {
  if (!check_A_conditions(b, theta).all_pass()) return false;
  EThetaSet e;
  try {
    e = build_E_theta(b, theta);
  } catch (const std::runtime_error&) {
    return false;
  }
  VoltageAssignment z = e.voltage(b);
  return cover_is_maniplex(b, z).is_maniplex && check_face_lifts(b, z).all_pass();
}

class ThetaSearch {
public:
  explicit ThetaSearch(const Maniplex& b) : b_(b) {
    for (int i = 0; i < kRank; ++i) comps_.push_back(face_components(b, i));
    count0_.assign(comps_[0].size(), {});
    count3_.assign(comps_[3].size(), {});
    used2_.assign(comps_[2].size(), false);
  }

  std::optional<ThetaSet> run() {
    if (descend(0)) return current_;
    return std::nullopt;
  }

private:
  bool descend(std::size_t depth) {
    if (depth == comps_[1].size()) return theta_admissible(b_, current_);
    for (Flag f : comps_[1].members[depth]) {
      std::size_t k2 = comps_[2].index_of[f];
      std::size_t k0 = comps_[0].index_of[f];
      std::size_t k3 = comps_[3].index_of[f];
      if (used2_[k2] || count0_[k0].size() == 2 || count3_[k3].size() == 2) continue;
      // Two flags sharing a vertex must lie in different facets, and vice versa.
      bool clash = false;
      for (Flag g : count0_[k0])
        if (comps_[3].index_of[g] == k3) clash = true;
      if (clash) continue;

      used2_[k2] = true;
      count0_[k0].push_back(f);
      count3_[k3].push_back(f);
      current_.theta.push_back(f);
      if (descend(depth + 1)) return true;
      current_.theta.pop_back();
      count3_[k3].pop_back();
      count0_[k0].pop_back();
      used2_[k2] = false;
    }
    return false;
  }

  const Maniplex& b_;
  std::vector<Components> comps_;
  std::vector<std::vector<Flag>> count0_;
  std::vector<std::vector<Flag>> count3_;
  std::vector<bool> used2_;
  ThetaSet current_;
};

} // namespace

ThetaSet find_theta(const Maniplex& b) {
  if (b.rank() != kRank) throw std::invalid_argument("find_theta needs a 4-maniplex");
  auto found = ThetaSearch(b).run();
  if (!found) throw std::runtime_error("no admissible Theta exists");
  return *found;
}

BConditionReport verify_B_conditions(const Maniplex& b, const ThetaSet& theta,
                                     const EThetaSet& e_theta) {
  BConditionReport r;
  std::vector<Components> comps;
  for (int i = 0; i < kRank; ++i) comps.push_back(face_components(b, i));

  // Edges of E_Theta by colour, as endpoint pairs.
  std::vector<std::vector<std::pair<Flag, Flag>>> by_colour(kRank);
  for (const Edge& e : e_theta.edges)
    by_colour[e.colour].push_back({e.lower, b.adj(e.colour, e.lower)});

  nlohmann::json endpoint_bad, avoid_bad;
  for (int i : {1, 2}) {
    std::set<Flag> shifted = theta.shifted(b, {(i + 2) % kRank});
    for (auto [u, v] : by_colour[i]) {
      if (!shifted.contains(u) && !shifted.contains(v) && endpoint_bad.is_null())
        endpoint_bad = {{"colour", i}, {"edge", {u, v}}};
      if ((theta.contains(u) || theta.contains(v)) && avoid_bad.is_null())
        avoid_bad = {{"colour", i}, {"edge", {u, v}}};
    }
  }
  r.checks.add("etheta.link_meets_shifted_theta", endpoint_bad.is_null(), endpoint_bad);
  r.checks.add("etheta.link_avoids_theta", avoid_bad.is_null(), avoid_bad);

  // counts[i][k][j]: j-edges of E_Theta inside the k-th i-face.
  auto counts_for = [&](int i) {
    std::vector<std::array<int, kRank>> counts(comps[i].size(), std::array<int, kRank>{});
    for (int j = 0; j < kRank; ++j) {
      if (j == i) continue;
      for (auto [u, v] : by_colour[j]) ++counts[comps[i].index_of[u]][j];
    }
    return counts;
  };

  nlohmann::json one_bad;
  for (int i : {1, 2}) {
    auto counts = counts_for(i);
    for (std::size_t k = 0; k < counts.size() && one_bad.is_null(); ++k)
      for (int j = 0; j < kRank; ++j)
        if (j != i && counts[k][j] != 1) one_bad = face_json(i, comps[i].ids[k]);
  }
  r.checks.add("etheta.one_link_per_colour", one_bad.is_null(), one_bad);

  nlohmann::json pattern_bad;
  for (int i : {0, 3}) {
    auto counts = counts_for(i);
    int j1 = (i + 1) % kRank, j2 = (i + kRank - 1) % kRank, j3 = (i + 2) % kRank;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const auto& c = counts[k];
      bool plain = c[j1] == 2 && c[j2] == 2 && c[j3] == 1;
      bool primed = c[j1] == 1 && c[j2] == 1 && c[j3] == 2;
      FaceId id{i, comps[i].ids[k]};
      r.primed.push_back({id, primed});
      if (plain == primed && pattern_bad.is_null()) {
        pattern_bad = face_json(i, id.component);
        pattern_bad["counts"] = c;
      }
    }
  }
  r.checks.add("etheta.vertex_facet_pattern", pattern_bad.is_null(), pattern_bad);
  return r;
}

BStar certify_cover(const Maniplex& b, const ThetaSet& theta, const EThetaSet& e_theta) {
  BStar out;
  out.b = b;
  out.theta = theta;
  out.e_theta = e_theta;
  out.voltage = e_theta.voltage(b);
  Certificate& c = out.certificate;

  CoverReport report = cover_is_maniplex(b, out.voltage);
  out.b_star = double_cover(b, out.voltage).graph;
  const Maniplex& s = out.b_star;
  c.add("cover.valid", report.is_maniplex);
  c.add("cover.flag_count", s.flag_count() == 2 * b.flag_count(), s.flag_count());
  nlohmann::json odd;
  if (report.odd_square)
    odd = {{"colours", {report.odd_square->i, report.odd_square->j}},
           {"flags", report.odd_square->flags}};
  c.add("cover.squares_even", report.squares_even, odd);
  c.append(check_face_lifts(b, out.voltage), "cover.");
  if (!report.is_maniplex) return out;

  FacePoset fb = face_poset(b);
  FacePoset fs = face_poset(s);
  const RankedPoset& pb = fb.poset;
  const RankedPoset& ps = fs.poset;

  // The projection on faces: well defined, bijective per rank, Hasse-preserving.
  bool projection_ok = ps.size() == pb.size() && ps.hasse().size() == pb.hasse().size();
  std::vector<int> image(ps.size(), -1);
  image[ps.minimum()] = pb.minimum();
  image[ps.maximum()] = pb.maximum();
  for (int i = 0; i < s.rank() && projection_ok; ++i)
    for (int face : ps.faces_of_rank(i)) {
      std::set<int> targets;
      for (Flag g : fs.members[face]) targets.insert(fb.face_of_flag[i][DoubleCover::project(g)]);
      if (targets.size() != 1) projection_ok = false;
      image[face] = *targets.begin();
    }
  if (projection_ok) {
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    projection_ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    std::set<std::pair<int, int>> target_edges(pb.hasse().begin(), pb.hasse().end());
    for (auto [lo, hi] : ps.hasse())
      if (!target_edges.contains({image[lo], image[hi]})) projection_ok = false;
  }
  c.add("poset.projection_isomorphism", projection_ok);
  out.poset_iso = projection_ok && poset_isomorphism(ps, pb).has_value();
  c.add("poset.isomorphic", out.poset_iso);

  FlagFunctionTable table = flag_function(fs);
  bool sheet_fibers = true;
  for (const auto& fiber : table.fibers)
    if (fiber.size() != 2 || fiber[0] % 2 != 0 || fiber[1] != fiber[0] + 1) sheet_fibers = false;
  c.add("unfaithful.sheet_fibers", sheet_fibers, table.fibers.size());
  FaithfulnessResult faith = is_faithful(table);
  if (faith.witness) out.witness = *faith.witness;
  c.add("unfaithful", !faith.faithful,
        faith.witness ? nlohmann::json{out.witness.first, out.witness.second} : nlohmann::json());

  PolytopeCheck poly = is_polytope(ps);
  c.add("polytopal", poly.ok, poly.ok ? nlohmann::json() : nlohmann::json(poly.detail));

  Verdict v = verdict(s, 0);
  c.add("verdict.sparse_not_semisparse", v.sparse && !v.semisparse,
        {{"sparse", v.sparse}, {"semisparse", v.semisparse}});
  return out;
}

BStar build_B_star() {
  Maniplex b = build_B();
  ThetaSet theta = find_theta(b);
  Certificate total = check_B(b);
  total.append(check_A_conditions(b, theta));
  EThetaSet e = build_E_theta(b, theta);
  total.add("etheta.size", e.edges.size() == 4 * theta.theta.size(), e.edges.size());
  total.append(verify_B_conditions(b, theta, e).checks);
  BStar out = certify_cover(b, theta, e);
  total.append(out.certificate);
  out.certificate = total;
  require(out.certificate);
  return out;
}

} // namespace maniplex
