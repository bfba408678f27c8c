#pragma once

// Words in the universal string Coxeter group acting on the flags of a
// maniplex; the stabilizer of a base flag stands in for a subgroup N.

#include "maniplex/core.hpp"
#include "maniplex/poset.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace maniplex {

/// r_{i0} r_{i1} ... r_{ik}; acts on flags from the right end first.
class CoxeterWord {
public:
  CoxeterWord() = default;
  explicit CoxeterWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Cancels r_i r_i pairs, also across letters commuting with r_i.
  CoxeterWord reduced() const;
  CoxeterWord inverse() const;
  /// Concatenation; (u * v) acts as u after v.
  friend CoxeterWord operator*(const CoxeterWord& u, const CoxeterWord& v);

  std::string to_string() const;

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;
  friend auto operator<=>(const CoxeterWord&, const CoxeterWord&) = default;

private:
  std::vector<int> letters_;
};

/// w f. Throws std::out_of_range for letters >= rank.
Flag act(const Maniplex& m, const CoxeterWord& w, Flag f);

bool in_stabilizer(const Maniplex& m, Flag base, const CoxeterWord& w);

struct SchreierReport {
  std::vector<CoxeterWord> words;  // shortlex-least w with w base = f
  bool transversal = false;        // every flag reached exactly once
  bool edges_match = false;        // r_i w_f base = r_i f for all i, f
  bool no_short_stabilizers = false;  // r_i, r_i r_j (i != j) never fix base
  std::vector<std::string> failures;
  bool ok() const { return transversal && edges_match && no_short_stabilizers; }
};

SchreierReport schreier_correspondence(const Maniplex& m, Flag base);

struct Verdict {
  bool sparse = false;
  bool semisparse = false;
  std::optional<std::pair<Flag, Flag>> unfaithful_pair;
  /// When base shares its chain with another flag: a word fixing the chain of
  /// base but not base itself.
  std::optional<CoxeterWord> chain_stabilizer_gap;
  PolytopeCheck polytope;
  RankedPoset double_coset_poset;  // Pos(M) with faces labelled W_i w N
};

Verdict verdict(const Maniplex& m, Flag base);

} // namespace maniplex
