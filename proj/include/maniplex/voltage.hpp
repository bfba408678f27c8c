#pragma once

// Z2-voltage assignments on coloured graphs and the double covers they induce.

#include "maniplex/core.hpp"

#include <array>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace maniplex {

/// An undirected coloured edge keyed by its lower endpoint.
struct Edge {
  Flag lower = 0;
  int colour = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The canonical key of the colour-i edge at f.
Edge edge_at(const Maniplex& m, Flag f, int colour);

/// Set of edges carrying voltage 1; all others carry 0.
class VoltageAssignment {
public:
  VoltageAssignment() = default;
  /// Canonicalizes the endpoints; throws std::invalid_argument for edges
  /// outside the base.
  VoltageAssignment(const Maniplex& base, std::span<const Edge> nontrivial);

  bool value(const Maniplex& base, Flag f, int colour) const {
    return nontrivial_.contains(edge_at(base, f, colour));
  }
  const std::set<Edge>& nontrivial() const { return nontrivial_; }
  std::size_t size() const { return nontrivial_.size(); }

private:
  std::set<Edge> nontrivial_;
};

/// Cover flags are numbered 2f + sheet.
struct DoubleCover {
  Maniplex graph;  // coloured graph; not necessarily a maniplex

  static constexpr Flag lift(Flag f, int sheet) { return 2 * f + static_cast<Flag>(sheet); }
  static constexpr Flag project(Flag g) { return g / 2; }
  static constexpr int sheet(Flag g) { return static_cast<int>(g % 2); }
};

DoubleCover double_cover(const Maniplex& m, const VoltageAssignment& z);

/// Plain undirected simple graph for covers of graphs that are not maniplexes.
struct SimpleGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Double cover of a plain graph; `nontrivial` holds indices into g.edges.
/// Cover vertex (v, s) is 2v + s.
SimpleGraph double_cover(const SimpleGraph& g, const std::set<std::size_t>& nontrivial);

bool is_connected(const SimpleGraph& g);

/// Whether pi^{-1}(flags) is connected in the cover using the given colours.
/// Throws std::invalid_argument when `flags` is not connected in m under `colours`.
bool lift_connected(const Maniplex& m, const VoltageAssignment& z, std::span<const Flag> flags,
                    ColorSet colours);

/// An {i,j}-square, |i-j| > 1, listed as f, r_i f, r_j r_i f, r_j f with f least.
struct Square {
  int i = 0;
  int j = 0;
  std::array<Flag, 4> flags{};
  std::array<bool, 4> voltage{};  // edges f-r_i f, r_i f - r_j r_i f, ..., r_j f - f
  int nontrivial() const;
  bool even() const { return nontrivial() % 2 == 0; }
};

std::vector<Square> square_parities(const Maniplex& m, const VoltageAssignment& z);

struct CoverReport {
  bool not_cut_set = false;       // M minus the nontrivial edges stays connected
  bool squares_even = false;
  std::optional<Square> odd_square;
  ValidationReport direct;        // validate() on the constructed cover
  bool is_maniplex = false;       // = direct.ok
  bool lemma_agrees = false;      // nonempty, not a cut set, even squares => maniplex
};

CoverReport cover_is_maniplex(const Maniplex& m, const VoltageAssignment& z);

} // namespace maniplex
