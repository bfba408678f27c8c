#pragma once

// Ranked posets, the face poset Pos(M) of a maniplex, the flag function and
// the abstract-polytope axioms.

#include "maniplex/core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maniplex {

/// Raised for posets that are not well-formed ranked posets (Hasse edges
/// skipping ranks, missing or repeated extreme faces, bad indices).
class MalformedPoset : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A graded poset with ranks -1..n stored as its Hasse diagram. The order is
/// the reflexive-transitive closure of the Hasse edges.
class RankedPoset {
public:
  RankedPoset() = default;
  RankedPoset(int rank, std::vector<int> face_ranks, std::vector<std::string> labels,
              std::vector<std::pair<int, int>> hasse);

  int rank() const { return rank_; }
  std::size_t size() const { return ranks_.size(); }
  int face_rank(int face) const { return ranks_[face]; }
  const std::string& label(int face) const { return labels_[face]; }
  std::optional<int> find(const std::string& label) const;

  /// Faces of rank r, r in -1..n, ascending by index.
  std::span<const int> faces_of_rank(int r) const { return by_rank_[r + 1]; }
  std::span<const int> upper_covers(int face) const { return up_[face]; }
  std::span<const int> lower_covers(int face) const { return down_[face]; }
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

  int minimum() const { return by_rank_.front().front(); }
  int maximum() const { return by_rank_.back().front(); }

  bool leq(int a, int b) const { return (above_[a][b >> 6] >> (b & 63)) & 1u; }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  /// Number of faces of each rank 0..n-1.
  std::vector<std::size_t> face_vector() const;

private:
  int rank_ = 0;
  std::vector<int> ranks_;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> hasse_;
  std::vector<std::vector<int>> by_rank_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<std::uint64_t>> above_;  // above_[a] has bit b iff a <= b
};

/// One face per rank -1..n.
using PosetChain = std::vector<int>;

/// Maximal chains of the interval [low, high], each listed from low to high,
/// in lexicographic order of face indices.
std::vector<PosetChain> maximal_chains(const RankedPoset& p, int low, int high);
std::vector<PosetChain> maximal_chains(const RankedPoset& p);

/// Pos(M) together with the face membership of every flag.
struct FacePoset {
  RankedPoset poset;
  std::vector<std::vector<int>> face_of_flag;  // [i][flag] -> poset face, i in 0..n-1
  std::vector<std::vector<Flag>> members;      // poset face -> flags (all flags for extremes)
};

FacePoset face_poset(const Maniplex& m);
RankedPoset pos_of(const Maniplex& m);

struct FlagFunctionTable {
  std::vector<PosetChain> chain_of;         // flag -> chain
  std::vector<std::vector<Flag>> fibers;    // ascending, ordered by least member
  std::vector<std::size_t> fiber_of;        // flag -> fiber index
};

FlagFunctionTable flag_function(const Maniplex& m);
FlagFunctionTable flag_function(const FacePoset& fp);

struct FaithfulnessResult {
  bool faithful = true;
  std::optional<std::pair<Flag, Flag>> witness;  // an unfaithful pair
};

FaithfulnessResult is_faithful(const Maniplex& m);
FaithfulnessResult is_faithful(const FlagFunctionTable& table);

enum class PolytopeAxiom { None, Bounded, Diamond, StrongFlagConnectivity };
std::string to_string(PolytopeAxiom a);

struct PolytopeCheck {
  bool ok = true;
  PolytopeAxiom failed = PolytopeAxiom::None;
  std::vector<int> witness;  // faces; for diamond/connectivity: the section bounds
  std::string detail;
};

struct PolytopeOptions {
  bool check_connectivity = true;
};

PolytopeCheck check_bounded(const RankedPoset& p);
PolytopeCheck check_diamond(const RankedPoset& p);
/// Flag-connectivity of every section F/G with rank gap >= 2, P included.
PolytopeCheck check_strong_flag_connectivity(const RankedPoset& p);
PolytopeCheck is_polytope(const RankedPoset& p, PolytopeOptions opts = {});

bool is_polytopal(const Maniplex& m, PolytopeOptions opts = {});

/// The interval {H : low <= H <= high}, re-ranked so that low has rank -1.
RankedPoset section(const RankedPoset& p, int low, int high);

class DiamondFailure : public std::runtime_error {
public:
  DiamondFailure(std::string what, std::vector<int> witness)
      : std::runtime_error(std::move(what)), witness(std::move(witness)) {}
  std::vector<int> witness;
};

/// Flag graph of a poset satisfying the diamond condition. Flags are the
/// maximal chains in the order produced by maximal_chains().
Maniplex flag_graph_of(const RankedPoset& p);

RankedPoset order_dual(const RankedPoset& p);

/// Rank-preserving isomorphism a -> b by backtracking over Hasse-adjacent
/// faces. Practical for posets with a few dozen faces.
std::optional<std::vector<int>> poset_isomorphism(const RankedPoset& a, const RankedPoset& b);

struct Rank3Entry {
  std::string name;
  bool faithful = true;
  bool polytopal = false;
  std::optional<std::pair<Flag, Flag>> pair0;  // {f, r0 f} in one fiber
  std::optional<std::pair<Flag, Flag>> pair2;  // {f, r2 f} in one fiber
};

struct Rank3Report {
  std::vector<Rank3Entry> entries;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks on every member that unfaithfulness rules out polytopality and is
/// equivalent to having unfaithful pairs {f, r0 f} and {g, r2 g}.
Rank3Report rank3_theorems(const std::vector<std::pair<std::string, Maniplex>>& corpus);

} // namespace maniplex
