#pragma once

// The 96-flag self-dual 4-polytope with hemicube facets and hemioctahedron
// vertex figures, the distinguished flag set Theta, and the double cover that
// keeps the face poset while doubling the flags.

#include "maniplex/certificate.hpp"
#include "maniplex/core.hpp"
#include "maniplex/coset.hpp"
#include "maniplex/voltage.hpp"

#include <array>
#include <set>
#include <utility>
#include <vector>

namespace maniplex {

/// [4,3,4] with (r0 r1 r2)^3 and (r1 r2 r3)^3.
Presentation p_presentation();

/// Face vector, flatness, facet and vertex-figure types, reflexibility,
/// self-duality, faithfulness and polytopality of a candidate B.
Certificate check_B(const Maniplex& b);

/// Flag graph of the polytope. Throws CertificationFailure if the
/// enumerated graph fails check_B.
Maniplex build_B();

/// Applies adjacencies left to right: superscript {0,2} maps f to r2 r0 f.
Flag shift(const Maniplex& m, Flag f, const std::vector<int>& superscript);

struct ThetaSet {
  std::vector<Flag> theta;  // one flag per 1-face, 1-faces in canonical order

  std::set<Flag> shifted(const Maniplex& b, const std::vector<int>& superscript) const;
  bool contains(Flag f) const;
};

/// Conditions on Theta per i-face: one flag per 1-/2-face; one or two per
/// 0-/3-face; for two, separated in every other rank and one shifted flag;
/// for one, two shifted flags.
Certificate check_A_conditions(const Maniplex& b, const ThetaSet& theta);

struct EThetaSet {
  std::vector<std::array<Edge, 4>> groups;  // per Theta flag: 0-, 2-, 3-, 1-edge
  std::set<Edge> edges;

  VoltageAssignment voltage(const Maniplex& b) const;
};

/// The edges f-f^0, f^0-f^02, f-f^3, f^3-f^31 for each f in Theta. Throws
/// std::runtime_error if two groups share an edge.
EThetaSet build_E_theta(const Maniplex& b, const ThetaSet& theta);

/// Whether every i-face lifts to a connected subgraph of the cover.
Certificate check_face_lifts(const Maniplex& b, const VoltageAssignment& z);

/// Backtracks over one flag per 1-face in ascending order, keeping 2-faces
/// distinct. Returns the first candidate satisfying check_A_conditions whose
/// voltage gives a maniplex cover with connected face lifts; this is the
/// lexicographically least valid choice.
ThetaSet find_theta(const Maniplex& b);

struct BConditionReport {
  Certificate checks;
  /// For each 0- and 3-face: true when the primed alternative holds.
  std::vector<std::pair<FaceId, bool>> primed;
};

BConditionReport verify_B_conditions(const Maniplex& b, const ThetaSet& theta,
                                     const EThetaSet& e_theta);

struct BStar {
  Maniplex b;
  ThetaSet theta;
  EThetaSet e_theta;
  VoltageAssignment voltage;
  Maniplex b_star;
  std::pair<Flag, Flag> witness;  // unfaithful sheet pair
  bool poset_iso = false;
  Certificate certificate;
};

/// Cover certification for any base/voltage pair: validity, face lifts,
/// poset isomorphism via the projection, unfaithfulness, polytopality.
BStar certify_cover(const Maniplex& b, const ThetaSet& theta, const EThetaSet& e_theta);

/// Runs the whole pipeline. Throws CertificationFailure on any failed check.
BStar build_B_star();

} // namespace maniplex
