#pragma once

// Maniplexes as properly edge-coloured graphs: n fixed-point-free involutions
// on the dense flag range 0..m-1.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maniplex {

using Flag = std::uint32_t;

/// Raised when a permutation table is not total on 0..m-1.
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Subset of {0..n-1}, n <= 32.
class ColorSet {
public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}
  ColorSet(std::initializer_list<int> colours);

  static constexpr ColorSet all(int n) {
    return ColorSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  /// {0..n-1} \ {i}
  static constexpr ColorSet all_but(int n, int i) { return all(n).without(i); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr ColorSet with(int i) const { return ColorSet(bits_ | (1u << i)); }
  constexpr ColorSet without(int i) const { return ColorSet(bits_ & ~(1u << i)); }
  constexpr bool subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  std::vector<int> members() const;

  friend constexpr bool operator==(ColorSet, ColorSet) = default;

private:
  std::uint32_t bits_ = 0;
};

/// A rank-n coloured graph given by n permutations of the flags. Construction
/// only checks that every table is total on 0..m-1; the maniplex axioms are
/// checked by validate().
class Maniplex {
public:
  Maniplex() = default;
  Maniplex(int rank, std::vector<std::vector<Flag>> perms);

  int rank() const { return rank_; }
  std::size_t flag_count() const { return flag_count_; }

  /// The i-adjacent flag, r_i f.
  Flag adj(int i, Flag f) const { return perms_[i][f]; }
  std::span<const Flag> perm(int i) const { return perms_[i]; }
  const std::vector<std::vector<Flag>>& perms() const { return perms_; }

  friend bool operator==(const Maniplex&, const Maniplex&) = default;

private:
  int rank_ = 0;
  std::size_t flag_count_ = 0;
  std::vector<std::vector<Flag>> perms_;
};

enum class Axiom { Involution, FixedPointFree, ProperColouring, Connected, CommutingSquares };

std::string to_string(Axiom a);

struct Violation {
  Axiom axiom;
  int colour = -1;
  int other_colour = -1;  // second colour for ProperColouring / CommutingSquares
  Flag flag = 0;
};

struct StructuralIssue {
  int colour = -1;
  std::int64_t flag = -1;
  std::int64_t value = -1;
  std::string message;
};

struct ValidationReport {
  bool ok = false;
  std::vector<StructuralIssue> structural;  // malformed tables; axioms unchecked when non-empty
  std::vector<Violation> violations;

  bool structurally_sound() const { return structural.empty(); }
  bool has(Axiom a) const;
};

ValidationReport validate(const Maniplex& m);
/// Validates raw tables, as read from a file, before they become a Maniplex.
ValidationReport validate(int rank, const std::vector<std::vector<std::int64_t>>& perms);

struct FaceId {
  int rank = 0;
  Flag component = 0;  // least flag of the component
  friend auto operator<=>(const FaceId&, const FaceId&) = default;
};

/// Orbits of <r_i : i in I>. Component ids are least members.
struct Components {
  std::vector<Flag> id_of;                // flag -> component id
  std::vector<Flag> ids;                  // ascending
  std::vector<std::vector<Flag>> members; // aligned with ids, ascending
  std::vector<std::size_t> index_of;      // flag -> position in ids

  std::size_t size() const { return ids.size(); }
};

Components components(const Maniplex& m, ColorSet colours);

/// Components of M with colour i removed, i.e. the i-faces.
std::vector<FaceId> faces(const Maniplex& m, int i);

/// Flag sets of the i-faces, in the same order as faces(m, i).
Components face_components(const Maniplex& m, int i);

Maniplex dual(const Maniplex& m);

/// The subgraph on `flags` using `colours`, renumbered. Colours are relabelled
/// 0..k-1 in ascending order, flags in ascending order.
Maniplex restrict_to(const Maniplex& m, std::span<const Flag> flags, ColorSet colours);

/// Colour-preserving isomorphism m1 -> m2 via forced propagation from flag 0.
std::optional<std::vector<Flag>> isomorphic(const Maniplex& m1, const Maniplex& m2);

/// Extends base -> image to a colour-preserving map. Empty when the forced
/// extension is inconsistent or not injective.
std::optional<std::vector<Flag>> propagate(const Maniplex& m1, const Maniplex& m2, Flag base,
                                           Flag image);

struct AutomorphismInfo {
  std::size_t count = 0;
  bool reflexible = false;
};

AutomorphismInfo automorphism_count(const Maniplex& m);

/// Whether all flags are reachable from flag 0 using only `colours`.
bool is_connected(const Maniplex& m, ColorSet colours);

} // namespace maniplex
