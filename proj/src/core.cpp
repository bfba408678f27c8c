#include "maniplex/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace maniplex {

ColorSet::ColorSet(std::initializer_list<int> colours) {
  for (int c : colours) bits_ |= 1u << c;
}

std::vector<int> ColorSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Maniplex::Maniplex(int rank, std::vector<std::vector<Flag>> perms)
    : rank_(rank), perms_(std::move(perms)) {
  if (rank < 1 || rank > 32) throw StructuralError("rank must lie in 1..32");
  if (static_cast<int>(perms_.size()) != rank)
    throw StructuralError("expected " + std::to_string(rank) + " permutations, got " +
                          std::to_string(perms_.size()));
  flag_count_ = perms_[0].size();
  if (flag_count_ == 0) throw StructuralError("a maniplex needs at least one flag");
  for (int i = 0; i < rank; ++i) {
    if (perms_[i].size() != flag_count_)
      throw StructuralError("permutation " + std::to_string(i) + " has the wrong length");
    for (Flag v : perms_[i])
      if (v >= flag_count_)
        throw StructuralError("permutation " + std::to_string(i) + " maps outside 0.." +
                              std::to_string(flag_count_ - 1));
  }
}

std::string to_string(Axiom a) {
  switch (a) {
  case Axiom::Involution: return "involution";
  case Axiom::FixedPointFree: return "fixed-point-free";
  case Axiom::ProperColouring: return "proper-colouring";
  case Axiom::Connected: return "connected";
  case Axiom::CommutingSquares: return "commuting-squares";
  }
  return "unknown";
}

bool ValidationReport::has(Axiom a) const {
  return std::any_of(violations.begin(), violations.end(),
                     [a](const Violation& v) { return v.axiom == a; });
}

bool is_connected(const Maniplex& m, ColorSet colours) {
  const std::size_t n = m.flag_count();
  std::vector<char> seen(n, 0);
  std::vector<Flag> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Flag f = stack.back();
    stack.pop_back();
    for (int i = 0; i < m.rank(); ++i) {
      if (!colours.contains(i)) continue;
      Flag g = m.adj(i, f);
      if (!seen[g]) {
        seen[g] = 1;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  return reached == n;
}

ValidationReport validate(const Maniplex& m) {
  ValidationReport report;
  const int n = m.rank();
  const std::size_t count = m.flag_count();
  for (int i = 0; i < n; ++i) {
    for (Flag f = 0; f < count; ++f) {
      Flag g = m.adj(i, f);
      if (g == f) report.violations.push_back({Axiom::FixedPointFree, i, -1, f});
      if (m.adj(i, g) != f) report.violations.push_back({Axiom::Involution, i, -1, f});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (Flag f = 0; f < count; ++f)
        if (m.adj(i, f) == m.adj(j, f))
          report.violations.push_back({Axiom::ProperColouring, i, j, f});
  if (!is_connected(m, ColorSet::all(n)))
    report.violations.push_back({Axiom::Connected, -1, -1, 0});
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      for (Flag f = 0; f < count; ++f)
        if (m.adj(j, m.adj(i, m.adj(j, m.adj(i, f)))) != f)
          report.violations.push_back({Axiom::CommutingSquares, i, j, f});
  report.ok = report.violations.empty();
  return report;
}

ValidationReport validate(int rank, const std::vector<std::vector<std::int64_t>>& perms) {
  ValidationReport report;
  if (rank < 1 || rank > 32) {
    report.structural.push_back({-1, -1, rank, "rank must lie in 1..32"});
    return report;
  }
  if (static_cast<int>(perms.size()) != rank) {
    report.structural.push_back({-1, -1, static_cast<std::int64_t>(perms.size()),
                                 "number of permutations differs from rank"});
    return report;
  }
  const std::size_t count = perms[0].size();
  if (count == 0) {
    report.structural.push_back({0, -1, 0, "empty permutation"});
    return report;
  }
  for (int i = 0; i < rank; ++i) {
    if (perms[i].size() != count) {
      report.structural.push_back({i, -1, static_cast<std::int64_t>(perms[i].size()),
                                   "permutation length differs from flag count"});
      continue;
    }
    for (std::size_t f = 0; f < count; ++f) {
      std::int64_t v = perms[i][f];
      if (v < 0 || static_cast<std::size_t>(v) >= count)
        report.structural.push_back(
            {i, static_cast<std::int64_t>(f), v, "image out of range"});
    }
  }
  if (!report.structural.empty()) return report;
  std::vector<std::vector<Flag>> tables(rank);
  for (int i = 0; i < rank; ++i) tables[i].assign(perms[i].begin(), perms[i].end());
  return validate(Maniplex(rank, std::move(tables)));
}

Components components(const Maniplex& m, ColorSet colours) {
  const std::size_t n = m.flag_count();
  constexpr Flag unset = std::numeric_limits<Flag>::max();
  Components out;
  out.id_of.assign(n, unset);
  out.index_of.assign(n, 0);
  std::vector<Flag> stack;
  // Scanning in ascending order makes the seed the least member.
  for (Flag seed = 0; seed < n; ++seed) {
    if (out.id_of[seed] != unset) continue;
    std::vector<Flag> members{seed};
    out.id_of[seed] = seed;
    stack.assign(1, seed);
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      for (int i = 0; i < m.rank(); ++i) {
        if (!colours.contains(i)) continue;
        Flag g = m.adj(i, f);
        if (out.id_of[g] == unset) {
          out.id_of[g] = seed;
          members.push_back(g);
          stack.push_back(g);
        }
      }
    }
    std::sort(members.begin(), members.end());
    for (Flag f : members) out.index_of[f] = out.ids.size();
    out.ids.push_back(seed);
    out.members.push_back(std::move(members));
  }
  return out;
}

Components face_components(const Maniplex& m, int i) {
  if (i < 0 || i >= m.rank())
    throw std::out_of_range("face rank " + std::to_string(i) + " out of range");
  return components(m, ColorSet::all_but(m.rank(), i));
}

std::vector<FaceId> faces(const Maniplex& m, int i) {
  Components c = face_components(m, i);
  std::vector<FaceId> out;
  out.reserve(c.size());
  for (Flag id : c.ids) out.push_back({i, id});
  return out;
}

Maniplex dual(const Maniplex& m) {
  std::vector<std::vector<Flag>> perms(m.perms().rbegin(), m.perms().rend());
  return Maniplex(m.rank(), std::move(perms));
}

Maniplex restrict_to(const Maniplex& m, std::span<const Flag> flags, ColorSet colours) {
  std::vector<Flag> sorted(flags.begin(), flags.end());
  std::sort(sorted.begin(), sorted.end());
  constexpr Flag absent = std::numeric_limits<Flag>::max();
  std::vector<Flag> local(m.flag_count(), absent);
  for (std::size_t k = 0; k < sorted.size(); ++k) local[sorted[k]] = static_cast<Flag>(k);
  std::vector<std::vector<Flag>> perms;
  for (int i : colours.members()) {
    if (i >= m.rank()) throw std::invalid_argument("colour outside the maniplex rank");
    std::vector<Flag> p(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      Flag image = local[m.adj(i, sorted[k])];
      if (image == absent)
        throw std::invalid_argument("flag set is not closed under colour " + std::to_string(i));
      p[k] = image;
    }
    perms.push_back(std::move(p));
  }
  const int rank = static_cast<int>(perms.size());
  return Maniplex(rank, std::move(perms));
}

std::optional<std::vector<Flag>> propagate(const Maniplex& m1, const Maniplex& m2, Flag base,
                                           Flag image) {
  if (m1.rank() != m2.rank()) return std::nullopt;
  constexpr Flag unset = std::numeric_limits<Flag>::max();
  std::vector<Flag> map(m1.flag_count(), unset);
  std::vector<char> used(m2.flag_count(), 0);
  map[base] = image;
  used[image] = 1;
  std::vector<Flag> queue{base};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Flag f = queue[head];
    for (int i = 0; i < m1.rank(); ++i) {
      Flag g = m1.adj(i, f);
      Flag target = m2.adj(i, map[f]);
      if (map[g] == unset) {
        if (used[target]) return std::nullopt;
        map[g] = target;
        used[target] = 1;
        queue.push_back(g);
      } else if (map[g] != target) {
        return std::nullopt;
      }
    }
  }
  return map;
}

std::optional<std::vector<Flag>> isomorphic(const Maniplex& m1, const Maniplex& m2) {
  if (m1.rank() != m2.rank() || m1.flag_count() != m2.flag_count()) return std::nullopt;
  for (Flag t = 0; t < m2.flag_count(); ++t) {
    auto map = propagate(m1, m2, 0, t);
    if (!map) continue;
    if (std::find(map->begin(), map->end(), std::numeric_limits<Flag>::max()) != map->end())
      continue;
    return map;
  }
  return std::nullopt;
}

AutomorphismInfo automorphism_count(const Maniplex& m) {
  AutomorphismInfo info;
  for (Flag t = 0; t < m.flag_count(); ++t)
    if (propagate(m, m, 0, t)) ++info.count;
  info.reflexible = info.count == m.flag_count();
  return info;
}

} // namespace maniplex
