#pragma once

// The colour-coded extension M^F: an (n+1)-maniplex on flags x Z2^2 whose last
// involution shifts the tag by (1,0) off the marked facet F and by (1,1) on it.

#include "maniplex/certificate.hpp"
#include "maniplex/core.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace maniplex {

/// Tags (0,0), (1,0), (0,1), (1,1) are coded 0, 1, 2, 3; tag addition is xor.
constexpr Flag extension_flag(Flag base, unsigned code) { return 4 * base + code; }
constexpr Flag extension_base(Flag f) { return f / 4; }
constexpr unsigned extension_code(Flag f) { return f % 4; }

/// The k-th facet of m in ascending id order; k = 0 is the facet of flag 0.
/// Throws std::out_of_range.
FaceId facet_by_index(const Maniplex& m, std::size_t k);

/// Throws std::invalid_argument when `facet` is not an (n-1)-face of m.
Maniplex extend(const Maniplex& m, const FaceId& facet);

enum class YProfile {
  Disjoint,  // {(0,0), (1,0)}
  Equal,     // {(0,0), (1,1)}
  Full,      // Z2^2
};

/// Tag codes in the profile, ascending.
std::vector<unsigned> tag_codes(YProfile y);

class NotPolytopal : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// How the i-face of phi meets the facet. Throws NotPolytopal when m is not
/// polytopal, since the three cases need not be exhaustive then.
YProfile y_profile(const Maniplex& m, const FaceId& facet, Flag phi, int i);

/// y_profile for every i < n and every flag, one polytopality check.
std::vector<std::vector<YProfile>> y_profiles(const Maniplex& m, const FaceId& facet);

struct ExtensionOptions {
  bool check_connectivity = true;
};

struct ExtensionResult {
  Maniplex extension;
  Certificate certificate;
  bool base_polytopal = false;
  bool faithful = true;  // measured on the extension
};

/// Builds M^F and checks it: validity, four facets each isomorphic to M, the
/// tag translation automorphism, lifted unfaithfulness, and when M is
/// polytopal the diamond condition, strong flag connectivity, facet sections
/// isomorphic to Pos(M), ridges in exactly two facets and faces as predicted
/// by the Y profiles.
ExtensionResult verify_extension(const Maniplex& m, const FaceId& facet,
                                 ExtensionOptions opts = {});

} // namespace maniplex
