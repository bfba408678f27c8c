#include "maniplex/voltage.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace maniplex {

Edge edge_at(const Maniplex& m, Flag f, int colour) {
  return {std::min(f, m.adj(colour, f)), colour};
}

VoltageAssignment::VoltageAssignment(const Maniplex& base, std::span<const Edge> nontrivial) {
  for (const Edge& e : nontrivial) {
    if (e.colour < 0 || e.colour >= base.rank() || e.lower >= base.flag_count())
      throw std::invalid_argument("voltage edge (" + std::to_string(e.lower) + ", " +
                                  std::to_string(e.colour) + ") is not an edge of the base");
    nontrivial_.insert(edge_at(base, e.lower, e.colour));
  }
}

DoubleCover double_cover(const Maniplex& m, const VoltageAssignment& z) {
  std::vector<std::vector<Flag>> perms(m.rank(), std::vector<Flag>(2 * m.flag_count()));
  for (int i = 0; i < m.rank(); ++i)
    for (Flag f = 0; f < m.flag_count(); ++f)
      for (int s = 0; s < 2; ++s)
        perms[i][DoubleCover::lift(f, s)] =
            DoubleCover::lift(m.adj(i, f), s ^ static_cast<int>(z.value(m, f, i)));
  return {Maniplex(m.rank(), std::move(perms))};
}

SimpleGraph double_cover(const SimpleGraph& g, const std::set<std::size_t>& nontrivial) {
  SimpleGraph out;
  out.vertices = 2 * g.vertices;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    auto [x, y] = g.edges[k];
    std::size_t t = nontrivial.contains(k) ? 1 : 0;
    for (std::size_t s = 0; s < 2; ++s) out.edges.emplace_back(2 * x + s, 2 * y + (s ^ t));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertices == 0) return true;
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (auto [x, y] : g.edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> seen(g.vertices, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertices;
}

namespace {

// Number of vertices of `flags` reached from flags[0], walking colours in
// `colours` inside the set, optionally through the cover.
std::size_t reach(const Maniplex& m, const VoltageAssignment* z, std::span<const Flag> flags,
                  ColorSet colours) {
  const std::size_t sheets = z ? 2 : 1;
  std::vector<char> inside(m.flag_count(), 0);
  for (Flag f : flags) inside[f] = 1;
  std::vector<char> seen(m.flag_count() * sheets, 0);
  auto key = [&](Flag f, int s) { return z ? DoubleCover::lift(f, s) : f; };
  std::vector<std::pair<Flag, int>> stack{{flags[0], 0}};
  seen[key(flags[0], 0)] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto [f, s] = stack.back();
    stack.pop_back();
    for (int i = 0; i < m.rank(); ++i) {
      if (!colours.contains(i)) continue;
      Flag g = m.adj(i, f);
      if (!inside[g]) continue;
      int t = z ? s ^ static_cast<int>(z->value(m, f, i)) : 0;
      if (!seen[key(g, t)]) {
        seen[key(g, t)] = 1;
        ++reached;
        stack.push_back({g, t});
      }
    }
  }
  return reached;
}

} // namespace

bool lift_connected(const Maniplex& m, const VoltageAssignment& z, std::span<const Flag> flags,
                    ColorSet colours) {
  if (flags.empty()) throw std::invalid_argument("empty flag set");
  std::vector<Flag> unique(flags.begin(), flags.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (reach(m, nullptr, unique, colours) != unique.size())
    throw std::invalid_argument("flag set is not connected under the given colours");
  return reach(m, &z, unique, colours) == 2 * unique.size();
}

int Square::nontrivial() const {
  return static_cast<int>(std::count(voltage.begin(), voltage.end(), true));
}

std::vector<Square> square_parities(const Maniplex& m, const VoltageAssignment& z) {
  std::vector<Square> out;
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = i + 2; j < m.rank(); ++j) {
      std::vector<char> done(m.flag_count(), 0);
      for (Flag f = 0; f < m.flag_count(); ++f) {
        if (done[f]) continue;
        Square sq;
        sq.i = i;
        sq.j = j;
        sq.flags = {f, m.adj(i, f), m.adj(j, m.adj(i, f)), m.adj(j, f)};
        sq.voltage = {z.value(m, sq.flags[0], i), z.value(m, sq.flags[1], j),
                      z.value(m, sq.flags[2], i), z.value(m, sq.flags[3], j)};
        for (Flag g : sq.flags) done[g] = 1;
        out.push_back(sq);
      }
    }
  }
  return out;
}

CoverReport cover_is_maniplex(const Maniplex& m, const VoltageAssignment& z) {
  CoverReport r;
  {
    // Connectivity of M after deleting the nontrivial edges.
    std::vector<char> seen(m.flag_count(), 0);
    std::vector<Flag> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      for (int i = 0; i < m.rank(); ++i) {
        if (z.value(m, f, i)) continue;
        Flag g = m.adj(i, f);
        if (!seen[g]) {
          seen[g] = 1;
          ++reached;
          stack.push_back(g);
        }
      }
    }
    r.not_cut_set = reached == m.flag_count();
  }
  r.squares_even = true;
  for (const Square& sq : square_parities(m, z)) {
    if (!sq.even()) {
      r.squares_even = false;
      r.odd_square = sq;
      break;
    }
  }
  r.direct = validate(double_cover(m, z).graph);
  r.is_maniplex = r.direct.ok;
  r.lemma_agrees = !(r.not_cut_set && z.size() > 0 && r.squares_even) || r.is_maniplex;
  return r;
}

} // namespace maniplex
