#include "maniplex/extension.hpp"

#include "maniplex/poset.hpp"

#include <algorithm>

namespace maniplex {

namespace {

Components checked_facet(const Maniplex& m, const FaceId& facet, std::size_t& index) {
  if (facet.rank != m.rank() - 1)
    throw std::invalid_argument("face of rank " + std::to_string(facet.rank) + " is not a facet");
  Components comps = face_components(m, facet.rank);
  auto it = std::lower_bound(comps.ids.begin(), comps.ids.end(), facet.component);
  if (it == comps.ids.end() || *it != facet.component)
    throw std::invalid_argument("flag " + std::to_string(facet.component) +
                                " is not the least flag of a facet");
  index = static_cast<std::size_t>(it - comps.ids.begin());
  return comps;
}

std::vector<std::vector<YProfile>> profiles_unchecked(const Maniplex& m, const FaceId& facet) {
  std::size_t index = 0;
  Components facets = checked_facet(m, facet, index);
  std::vector<char> in_f(m.flag_count(), 0);
  for (Flag f : facets.members[index]) in_f[f] = 1;

  std::vector<std::vector<YProfile>> out(m.rank(), std::vector<YProfile>(m.flag_count()));
  for (int i = 0; i < m.rank(); ++i) {
    Components comps = face_components(m, i);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const auto& members = comps.members[k];
      bool meets = std::any_of(members.begin(), members.end(), [&](Flag f) { return in_f[f]; });
      YProfile y = YProfile::Full;
      if (!meets)
        y = YProfile::Disjoint;
      else if (i == m.rank() - 1 && comps.ids[k] == facet.component)
        y = YProfile::Equal;
      for (Flag f : members) out[i][f] = y;
    }
  }
  return out;
}

} // namespace

FaceId facet_by_index(const Maniplex& m, std::size_t k) {
  std::vector<FaceId> all = faces(m, m.rank() - 1);
  if (k >= all.size())
    throw std::out_of_range("facet index " + std::to_string(k) + " out of range (" +
                            std::to_string(all.size()) + " facets)");
  return all[k];
}

Maniplex extend(const Maniplex& m, const FaceId& facet) {
  std::size_t index = 0;
  Components facets = checked_facet(m, facet, index);
  std::vector<char> in_f(m.flag_count(), 0);
  for (Flag f : facets.members[index]) in_f[f] = 1;

  const int n = m.rank();
  const std::size_t count = 4 * m.flag_count();
  std::vector<std::vector<Flag>> perms(n + 1, std::vector<Flag>(count));
  for (Flag phi = 0; phi < m.flag_count(); ++phi)
    for (unsigned code = 0; code < 4; ++code) {
      Flag f = extension_flag(phi, code);
      for (int i = 0; i < n; ++i) perms[i][f] = extension_flag(m.adj(i, phi), code);
      perms[n][f] = extension_flag(phi, code ^ (in_f[phi] ? 3u : 1u));
    }
  return Maniplex(n + 1, std::move(perms));
}

std::vector<unsigned> tag_codes(YProfile y) {
  switch (y) {
  case YProfile::Disjoint: return {0, 1};
  case YProfile::Equal: return {0, 3};
  case YProfile::Full: break;
  }
  return {0, 1, 2, 3};
}

std::vector<std::vector<YProfile>> y_profiles(const Maniplex& m, const FaceId& facet) {
  if (!is_polytopal(m)) throw NotPolytopal("Y profiles need a polytopal maniplex");
  return profiles_unchecked(m, facet);
}

YProfile y_profile(const Maniplex& m, const FaceId& facet, Flag phi, int i) {
  if (i < 0 || i >= m.rank()) throw std::out_of_range("rank outside 0..n-1");
  if (phi >= m.flag_count()) throw std::out_of_range("flag outside the maniplex");
  return y_profiles(m, facet)[i][phi];
}

ExtensionResult verify_extension(const Maniplex& m, const FaceId& facet, ExtensionOptions opts) {
  ExtensionResult r;
  Certificate& c = r.certificate;
  const int n = m.rank();
  r.extension = extend(m, facet);
  const Maniplex& e = r.extension;

  c.add("extension.valid", validate(e).ok);
  c.add("extension.flag_count", e.flag_count() == 4 * m.flag_count(), e.flag_count());

  Components facets = face_components(e, n);
  bool facets_ok = facets.size() == 4;
  for (std::size_t k = 0; k < facets.size() && facets_ok; ++k)
    facets_ok = isomorphic(restrict_to(e, facets.members[k], ColorSet::all(n)), m).has_value();
  c.add("extension.four_facets_isomorphic", facets_ok, facets.size());

  bool translation = true;
  for (Flag f = 0; f < e.flag_count() && translation; ++f)
    for (int i = 0; i <= n; ++i)
      if ((e.adj(i, f ^ 1u)) != (e.adj(i, f) ^ 1u)) translation = false;
  c.add("extension.tag_translation_automorphism", translation);

  FacePoset fp = face_poset(e);
  FlagFunctionTable table = flag_function(fp);
  FaithfulnessResult base_faith = is_faithful(m);
  if (!base_faith.faithful) {
    auto [p, q] = *base_faith.witness;
    Flag a = extension_flag(p, 0), b = extension_flag(q, 0);
    c.add("extension.unfaithful_lift", table.fiber_of[a] == table.fiber_of[b],
          nlohmann::json{a, b});
  }
  r.faithful = is_faithful(table).faithful;

  r.base_polytopal = is_polytopal(m);
  if (!r.base_polytopal) return r;
  const RankedPoset& p = fp.poset;

  PolytopeCheck bounded = check_bounded(p);
  c.add("extension.bounded", bounded.ok, bounded.ok ? nlohmann::json() : nlohmann::json(bounded.detail));
  PolytopeCheck diamond = check_diamond(p);
  c.add("extension.diamond", diamond.ok, diamond.witness.empty() ? nlohmann::json() : nlohmann::json(diamond.witness));
  if (opts.check_connectivity) {
    PolytopeCheck sfc = check_strong_flag_connectivity(p);
    c.add("extension.strong_flag_connectivity", sfc.ok,
          sfc.witness.empty() ? nlohmann::json() : nlohmann::json(sfc.witness));
  }

  RankedPoset base_pos = pos_of(m);
  nlohmann::json bad_section;
  for (int g : p.faces_of_rank(n))
    if (!poset_isomorphism(section(p, p.minimum(), g), base_pos)) {
      bad_section = p.label(g);
      break;
    }
  c.add("extension.facet_sections_isomorphic", bad_section.is_null(), bad_section);

  nlohmann::json bad_ridge;
  for (int g : p.faces_of_rank(n - 1))
    if (p.upper_covers(g).size() != 2) {
      bad_ridge = p.label(g);
      break;
    }
  c.add("extension.ridges_in_two_facets", bad_ridge.is_null(), bad_ridge);

  auto profiles = profiles_unchecked(m, facet);
  nlohmann::json bad_face;
  for (int i = 0; i < n && bad_face.is_null(); ++i) {
    Components base_faces = face_components(m, i);
    Components ext_faces = face_components(e, i);
    for (std::size_t k = 0; k < base_faces.size(); ++k) {
      Flag phi = base_faces.ids[k];
      std::vector<Flag> predicted;
      for (Flag psi : base_faces.members[k])
        for (unsigned code : tag_codes(profiles[i][phi])) predicted.push_back(extension_flag(psi, code));
      std::sort(predicted.begin(), predicted.end());
      if (predicted != ext_faces.members[ext_faces.index_of[extension_flag(phi, 0)]]) {
        bad_face = {{"rank", i}, {"flag", phi}};
        break;
      }
    }
  }
  c.add("extension.faces_match_y_profiles", bad_face.is_null(), bad_face);
  return r;
}

} // namespace maniplex
