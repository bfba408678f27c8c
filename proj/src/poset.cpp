#include "maniplex/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace maniplex {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

std::string face_label(int rank, Flag id) {
  return std::to_string(rank) + ":" + std::to_string(id);
}

} // namespace

RankedPoset::RankedPoset(int rank, std::vector<int> face_ranks, std::vector<std::string> labels,
                         std::vector<std::pair<int, int>> hasse)
    : rank_(rank), ranks_(std::move(face_ranks)), labels_(std::move(labels)) {
  if (rank < 0) throw MalformedPoset("poset rank must be non-negative");
  const int count = static_cast<int>(ranks_.size());
  if (labels_.size() != ranks_.size())
    throw MalformedPoset("label count differs from face count");
  {
    std::set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l).second) throw MalformedPoset("duplicate face label '" + l + "'");
  }
  by_rank_.assign(rank + 2, {});
  for (int f = 0; f < count; ++f) {
    if (ranks_[f] < -1 || ranks_[f] > rank)
      throw MalformedPoset("face '" + labels_[f] + "' has rank outside -1.." +
                           std::to_string(rank));
    by_rank_[ranks_[f] + 1].push_back(f);
  }
  if (by_rank_.front().size() != 1) throw MalformedPoset("expected exactly one face of rank -1");
  if (by_rank_.back().size() != 1)
    throw MalformedPoset("expected exactly one face of rank " + std::to_string(rank));

  std::sort(hasse.begin(), hasse.end());
  hasse.erase(std::unique(hasse.begin(), hasse.end()), hasse.end());
  up_.assign(count, {});
  down_.assign(count, {});
  for (auto [lo, hi] : hasse) {
    if (lo < 0 || lo >= count || hi < 0 || hi >= count)
      throw MalformedPoset("Hasse edge refers to an unknown face");
    if (ranks_[hi] != ranks_[lo] + 1)
      throw MalformedPoset("Hasse edge " + labels_[lo] + " -> " + labels_[hi] +
                           " does not join consecutive ranks");
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
  for (auto& v : down_) std::sort(v.begin(), v.end());
  hasse_ = std::move(hasse);

  const std::size_t words = (static_cast<std::size_t>(count) + 63) / 64;
  above_.assign(count, std::vector<std::uint64_t>(words, 0));
  for (int r = rank; r >= -1; --r) {
    for (int f : by_rank_[r + 1]) {
      above_[f][f >> 6] |= std::uint64_t{1} << (f & 63);
      for (int c : up_[f])
        for (std::size_t w = 0; w < words; ++w) above_[f][w] |= above_[c][w];
    }
  }
}

std::optional<int> RankedPoset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::vector<std::size_t> RankedPoset::face_vector() const {
  std::vector<std::size_t> out;
  for (int r = 0; r < rank_; ++r) out.push_back(by_rank_[r + 1].size());
  return out;
}

namespace {

void extend_chains(const RankedPoset& p, int high, PosetChain& chain,
                   std::vector<PosetChain>& out) {
  int top = chain.back();
  if (top == high) {
    out.push_back(chain);
    return;
  }
  for (int c : p.upper_covers(top)) {
    if (!p.leq(c, high)) continue;
    chain.push_back(c);
    extend_chains(p, high, chain, out);
    chain.pop_back();
  }
}

} // namespace

std::vector<PosetChain> maximal_chains(const RankedPoset& p, int low, int high) {
  std::vector<PosetChain> out;
  if (!p.leq(low, high)) return out;
  PosetChain chain{low};
  extend_chains(p, high, chain, out);
  return out;
}

std::vector<PosetChain> maximal_chains(const RankedPoset& p) {
  return maximal_chains(p, p.minimum(), p.maximum());
}

FacePoset face_poset(const Maniplex& m) {
  const int n = m.rank();
  std::vector<Components> comps;
  for (int i = 0; i < n; ++i) comps.push_back(face_components(m, i));

  FacePoset out;
  std::vector<int> ranks{-1};
  std::vector<std::string> labels{"F-1"};
  std::vector<std::size_t> offset(n);
  std::vector<Flag> all(m.flag_count());
  std::iota(all.begin(), all.end(), Flag{0});
  out.members.push_back(all);
  for (int i = 0; i < n; ++i) {
    offset[i] = ranks.size();
    for (std::size_t k = 0; k < comps[i].size(); ++k) {
      ranks.push_back(i);
      labels.push_back(face_label(i, comps[i].ids[k]));
      out.members.push_back(comps[i].members[k]);
    }
  }
  const int top = static_cast<int>(ranks.size());
  ranks.push_back(n);
  labels.push_back("F" + std::to_string(n));
  out.members.push_back(all);

  out.face_of_flag.assign(n, std::vector<int>(m.flag_count()));
  for (int i = 0; i < n; ++i)
    for (Flag f = 0; f < m.flag_count(); ++f)
      out.face_of_flag[i][f] = static_cast<int>(offset[i] + comps[i].index_of[f]);

  // Consecutive-rank incidences are witnessed by a shared flag; the closure
  // of these gives the full intersection order.
  std::set<std::pair<int, int>> hasse;
  for (std::size_t k = 0; k < comps[0].size(); ++k)
    hasse.insert({0, static_cast<int>(offset[0] + k)});
  for (std::size_t k = 0; k < comps[n - 1].size(); ++k)
    hasse.insert({static_cast<int>(offset[n - 1] + k), top});
  for (int i = 0; i + 1 < n; ++i)
    for (Flag f = 0; f < m.flag_count(); ++f)
      hasse.insert({out.face_of_flag[i][f], out.face_of_flag[i + 1][f]});

  out.poset = RankedPoset(n, std::move(ranks), std::move(labels),
                          std::vector<std::pair<int, int>>(hasse.begin(), hasse.end()));
  return out;
}

RankedPoset pos_of(const Maniplex& m) { return face_poset(m).poset; }

FlagFunctionTable flag_function(const FacePoset& fp) {
  FlagFunctionTable table;
  const int n = fp.poset.rank();
  const std::size_t count = fp.face_of_flag.empty() ? 0 : fp.face_of_flag[0].size();
  std::map<PosetChain, std::size_t> index;
  table.chain_of.reserve(count);
  table.fiber_of.resize(count);
  for (Flag f = 0; f < count; ++f) {
    PosetChain chain{fp.poset.minimum()};
    for (int i = 0; i < n; ++i) chain.push_back(fp.face_of_flag[i][f]);
    chain.push_back(fp.poset.maximum());
    auto [it, fresh] = index.emplace(chain, table.fibers.size());
    if (fresh) table.fibers.emplace_back();
    table.fibers[it->second].push_back(f);
    table.fiber_of[f] = it->second;
    table.chain_of.push_back(std::move(chain));
  }
  return table;
}

FlagFunctionTable flag_function(const Maniplex& m) { return flag_function(face_poset(m)); }

FaithfulnessResult is_faithful(const FlagFunctionTable& table) {
  FaithfulnessResult r;
  for (const auto& fiber : table.fibers) {
    if (fiber.size() > 1) {
      r.faithful = false;
      r.witness = std::make_pair(fiber[0], fiber[1]);
      break;
    }
  }
  return r;
}

FaithfulnessResult is_faithful(const Maniplex& m) { return is_faithful(flag_function(m)); }

std::string to_string(PolytopeAxiom a) {
  switch (a) {
  case PolytopeAxiom::None: return "none";
  case PolytopeAxiom::Bounded: return "bounded";
  case PolytopeAxiom::Diamond: return "diamond";
  case PolytopeAxiom::StrongFlagConnectivity: return "strong-flag-connectivity";
  }
  return "unknown";
}

PolytopeCheck check_bounded(const RankedPoset& p) {
  PolytopeCheck c;
  for (int f = 0; f < static_cast<int>(p.size()); ++f) {
    if (!p.leq(p.minimum(), f) || !p.leq(f, p.maximum())) {
      c.ok = false;
      c.failed = PolytopeAxiom::Bounded;
      c.witness = {f};
      c.detail = "face " + p.label(f) + " is not between the extreme faces";
      return c;
    }
  }
  return c;
}

PolytopeCheck check_diamond(const RankedPoset& p) {
  PolytopeCheck c;
  for (int r = -1; r + 2 <= p.rank(); ++r) {
    for (int lo : p.faces_of_rank(r)) {
      for (int hi : p.faces_of_rank(r + 2)) {
        if (!p.less(lo, hi)) continue;
        int between = 0;
        for (int mid : p.upper_covers(lo))
          if (p.leq(mid, hi)) ++between;
        if (between != 2) {
          c.ok = false;
          c.failed = PolytopeAxiom::Diamond;
          c.witness = {lo, hi};
          c.detail = "section " + p.label(hi) + "/" + p.label(lo) + " has " +
                     std::to_string(between) + " intermediate faces";
          return c;
        }
      }
    }
  }
  return c;
}

namespace {

bool section_flag_connected(const RankedPoset& p, int low, int high) {
  auto chains = maximal_chains(p, low, high);
  if (chains.size() <= 1) return !chains.empty();
  UnionFind uf(chains.size());
  std::size_t merges = 0;
  const std::size_t len = chains.front().size();
  for (std::size_t pos = 1; pos + 1 < len; ++pos) {
    std::map<PosetChain, std::size_t> first;
    for (std::size_t k = 0; k < chains.size(); ++k) {
      PosetChain key = chains[k];
      key[pos] = -1;
      auto [it, fresh] = first.emplace(std::move(key), k);
      if (!fresh && uf.unite(it->second, k)) ++merges;
    }
  }
  return merges + 1 == chains.size();
}

} // namespace

PolytopeCheck check_strong_flag_connectivity(const RankedPoset& p) {
  PolytopeCheck c;
  for (int lo = 0; lo < static_cast<int>(p.size()); ++lo) {
    for (int hi = 0; hi < static_cast<int>(p.size()); ++hi) {
      if (p.face_rank(hi) - p.face_rank(lo) < 2 || !p.less(lo, hi)) continue;
      if (!section_flag_connected(p, lo, hi)) {
        c.ok = false;
        c.failed = PolytopeAxiom::StrongFlagConnectivity;
        c.witness = {lo, hi};
        c.detail = "section " + p.label(hi) + "/" + p.label(lo) + " is not flag-connected";
        return c;
      }
    }
  }
  return c;
}

PolytopeCheck is_polytope(const RankedPoset& p, PolytopeOptions opts) {
  if (auto c = check_bounded(p); !c.ok) return c;
  if (auto c = check_diamond(p); !c.ok) return c;
  if (opts.check_connectivity) return check_strong_flag_connectivity(p);
  return {};
}

bool is_polytopal(const Maniplex& m, PolytopeOptions opts) {
  return is_polytope(pos_of(m), opts).ok;
}

RankedPoset section(const RankedPoset& p, int low, int high) {
  if (!p.less(low, high))
    throw std::invalid_argument("section bounds " + p.label(low) + ", " + p.label(high) +
                                " are not strictly comparable");
  const int base = p.face_rank(low);
  std::vector<int> keep;
  std::vector<int> local(p.size(), -1);
  for (int f = 0; f < static_cast<int>(p.size()); ++f) {
    if (p.leq(low, f) && p.leq(f, high)) {
      local[f] = static_cast<int>(keep.size());
      keep.push_back(f);
    }
  }
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (int f : keep) {
    ranks.push_back(p.face_rank(f) - base - 1);
    labels.push_back(p.label(f));
  }
  std::vector<std::pair<int, int>> hasse;
  for (auto [lo, hi] : p.hasse())
    if (local[lo] >= 0 && local[hi] >= 0) hasse.emplace_back(local[lo], local[hi]);
  return RankedPoset(p.face_rank(high) - base - 1, std::move(ranks), std::move(labels),
                     std::move(hasse));
}

Maniplex flag_graph_of(const RankedPoset& p) {
  if (auto c = check_bounded(p); !c.ok) throw DiamondFailure(c.detail, c.witness);
  if (auto c = check_diamond(p); !c.ok) throw DiamondFailure(c.detail, c.witness);
  const int n = p.rank();
  if (n < 1) throw std::invalid_argument("flag graph needs rank >= 1");
  auto chains = maximal_chains(p);
  std::vector<std::vector<Flag>> perms(n, std::vector<Flag>(chains.size()));
  for (int i = 0; i < n; ++i) {
    std::map<PosetChain, std::vector<Flag>> groups;
    for (std::size_t k = 0; k < chains.size(); ++k) {
      PosetChain key = chains[k];
      key[i + 1] = -1;
      groups[std::move(key)].push_back(static_cast<Flag>(k));
    }
    for (const auto& [key, members] : groups) {
      if (members.size() != 2)
        throw DiamondFailure("chain has " + std::to_string(members.size() - 1) + " " +
                                 std::to_string(i) + "-adjacent chains",
                             chains[members[0]]);
      perms[i][members[0]] = members[1];
      perms[i][members[1]] = members[0];
    }
  }
  return Maniplex(n, std::move(perms));
}

RankedPoset order_dual(const RankedPoset& p) {
  const int n = p.rank();
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (int f = 0; f < static_cast<int>(p.size()); ++f) {
    ranks.push_back(n - 1 - p.face_rank(f));
    labels.push_back(p.label(f));
  }
  std::vector<std::pair<int, int>> hasse;
  for (auto [lo, hi] : p.hasse()) hasse.emplace_back(hi, lo);
  return RankedPoset(n, std::move(ranks), std::move(labels), std::move(hasse));
}

namespace {

struct IsoSearch {
  const RankedPoset& a;
  const RankedPoset& b;
  std::vector<int> order;
  std::vector<int> fwd;
  std::vector<int> back;

  bool consistent(int x, int y) const {
    if (a.upper_covers(x).size() != b.upper_covers(y).size() ||
        a.lower_covers(x).size() != b.lower_covers(y).size())
      return false;
    auto covers_match = [&](std::span<const int> ax, std::span<const int> by) {
      for (int u : ax)
        if (fwd[u] >= 0 && std::find(by.begin(), by.end(), fwd[u]) == by.end()) return false;
      for (int v : by)
        if (back[v] >= 0 && std::find(ax.begin(), ax.end(), back[v]) == ax.end()) return false;
      return true;
    };
    return covers_match(a.upper_covers(x), b.upper_covers(y)) &&
           covers_match(a.lower_covers(x), b.lower_covers(y));
  }

  bool run(std::size_t k) {
    if (k == order.size()) return true;
    int x = order[k];
    for (int y : b.faces_of_rank(a.face_rank(x))) {
      if (back[y] >= 0 || !consistent(x, y)) continue;
      fwd[x] = y;
      back[y] = x;
      if (run(k + 1)) return true;
      fwd[x] = -1;
      back[y] = -1;
    }
    return false;
  }
};

} // namespace

std::optional<std::vector<int>> poset_isomorphism(const RankedPoset& a, const RankedPoset& b) {
  if (a.rank() != b.rank() || a.size() != b.size() || a.face_vector() != b.face_vector() ||
      a.hasse().size() != b.hasse().size())
    return std::nullopt;
  IsoSearch s{a, b, {}, std::vector<int>(a.size(), -1), std::vector<int>(b.size(), -1)};
  // Breadth-first over the Hasse diagram so each new face has mapped neighbours.
  std::vector<char> seen(a.size(), 0);
  s.order.push_back(a.minimum());
  seen[a.minimum()] = 1;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    int x = s.order[head];
    for (auto covers : {a.upper_covers(x), a.lower_covers(x)})
      for (int y : covers)
        if (!seen[y]) {
          seen[y] = 1;
          s.order.push_back(y);
        }
  }
  for (int f = 0; f < static_cast<int>(a.size()); ++f)
    if (!seen[f]) s.order.push_back(f);
  if (!s.run(0)) return std::nullopt;
  return s.fwd;
}

Rank3Report rank3_theorems(const std::vector<std::pair<std::string, Maniplex>>& corpus) {
  Rank3Report report;
  for (const auto& [name, m] : corpus) {
    if (m.rank() != 3) throw std::invalid_argument(name + " is not a rank-3 maniplex");
    FacePoset fp = face_poset(m);
    FlagFunctionTable table = flag_function(fp);
    Rank3Entry e;
    e.name = name;
    e.faithful = is_faithful(table).faithful;
    e.polytopal = is_polytope(fp.poset).ok;
    for (Flag f = 0; f < m.flag_count(); ++f) {
      if (!e.pair0 && table.fiber_of[f] == table.fiber_of[m.adj(0, f)])
        e.pair0 = std::make_pair(f, m.adj(0, f));
      if (!e.pair2 && table.fiber_of[f] == table.fiber_of[m.adj(2, f)])
        e.pair2 = std::make_pair(f, m.adj(2, f));
    }
    if (!e.faithful && e.polytopal)
      report.violations.push_back(name + ": unfaithful yet polytopal");
    if (!e.faithful && (!e.pair0 || !e.pair2))
      report.violations.push_back(name + ": unfaithful without both {f, f^0} and {g, g^2} pairs");
    if (e.faithful && (e.pair0 || e.pair2))
      report.violations.push_back(name + ": faithful but has an unfaithful pair");
    report.entries.push_back(std::move(e));
  }
  return report;
}

} // namespace maniplex
