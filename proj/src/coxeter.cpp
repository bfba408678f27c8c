#include "maniplex/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace maniplex {

CoxeterWord::CoxeterWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_)
    if (x < 0) throw std::invalid_argument("negative generator index");
}

CoxeterWord CoxeterWord::reduced() const {
  std::vector<int> out;
  for (int x : letters_) {
    bool cancelled = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (*it == x) {
        out.erase(std::next(it).base());
        cancelled = true;
        break;
      }
      if (std::abs(*it - x) <= 1) break;
    }
    if (!cancelled) out.push_back(x);
  }
  return CoxeterWord(std::move(out));
}

CoxeterWord CoxeterWord::inverse() const {
  return CoxeterWord(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

CoxeterWord operator*(const CoxeterWord& u, const CoxeterWord& v) {
  std::vector<int> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return CoxeterWord(std::move(letters));
}

std::string CoxeterWord::to_string() const {
  std::string s;
  for (int x : letters_) s += "r" + std::to_string(x);
  return s.empty() ? "1" : s;
}

Flag act(const Maniplex& m, const CoxeterWord& w, Flag f) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (*it >= m.rank())
      throw std::out_of_range("generator r" + std::to_string(*it) + " exceeds the rank");
    f = m.adj(*it, f);
  }
  return f;
}

bool in_stabilizer(const Maniplex& m, Flag base, const CoxeterWord& w) {
  return act(m, w, base) == base;
}

SchreierReport schreier_correspondence(const Maniplex& m, Flag base) {
  SchreierReport r;
  const std::size_t count = m.flag_count();
  std::vector<std::optional<CoxeterWord>> word(count);
  word[base] = CoxeterWord{};
  std::vector<Flag> layer{base};
  std::size_t reached = 1;
  // Words in a layer are kept in lexicographic order; trying letters in the
  // outer loop makes the first hit for each flag its shortlex-least word.
  while (!layer.empty()) {
    std::vector<Flag> next;
    for (int i = 0; i < m.rank(); ++i) {
      for (Flag f : layer) {
        Flag g = m.adj(i, f);
        if (word[g]) continue;
        word[g] = CoxeterWord({i}) * *word[f];
        next.push_back(g);
        ++reached;
      }
    }
    layer = std::move(next);
  }
  r.transversal = reached == count;
  if (!r.transversal) r.failures.push_back("some flags are unreachable from the base");
  for (Flag f = 0; f < count; ++f) {
    r.words.push_back(word[f].value_or(CoxeterWord{}));
    if (word[f] && act(m, *word[f], base) != f) {
      r.transversal = false;
      r.failures.push_back("word for flag " + std::to_string(f) + " misses its flag");
    }
  }
  r.edges_match = r.transversal;
  if (r.transversal) {
    for (Flag f = 0; f < count; ++f)
      for (int i = 0; i < m.rank(); ++i)
        if (act(m, CoxeterWord({i}) * r.words[f], base) != m.adj(i, f)) {
          r.edges_match = false;
          r.failures.push_back("edge mismatch at flag " + std::to_string(f) + " colour " +
                               std::to_string(i));
        }
  }
  r.no_short_stabilizers = true;
  for (int i = 0; i < m.rank(); ++i) {
    if (in_stabilizer(m, base, CoxeterWord({i}))) {
      r.no_short_stabilizers = false;
      r.failures.push_back("r" + std::to_string(i) + " fixes the base flag");
    }
    for (int j = 0; j < m.rank(); ++j)
      if (i != j && in_stabilizer(m, base, CoxeterWord({i, j}))) {
        r.no_short_stabilizers = false;
        r.failures.push_back("r" + std::to_string(i) + "r" + std::to_string(j) +
                             " fixes the base flag");
      }
  }
  return r;
}

Verdict verdict(const Maniplex& m, Flag base) {
  Verdict v;
  FacePoset fp = face_poset(m);
  FlagFunctionTable table = flag_function(fp);
  v.polytope = is_polytope(fp.poset);
  v.sparse = v.polytope.ok;
  FaithfulnessResult faith = is_faithful(table);
  v.unfaithful_pair = faith.witness;
  v.semisparse = v.sparse && faith.faithful;

  SchreierReport s = schreier_correspondence(m, base);
  const auto& fiber = table.fibers[table.fiber_of[base]];
  for (Flag f : fiber)
    if (f != base) {
      v.chain_stabilizer_gap = s.words[f];
      break;
    }

  const RankedPoset& p = fp.poset;
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (int face = 0; face < static_cast<int>(p.size()); ++face) {
    int r = p.face_rank(face);
    ranks.push_back(r);
    if (r < 0 || r >= p.rank()) {
      labels.push_back(p.label(face));
    } else {
      const CoxeterWord& w = s.words[fp.members[face].front()];
      labels.push_back("W" + std::to_string(r) + (w.empty() ? "" : " " + w.to_string()) + " N");
    }
  }
  v.double_coset_poset = RankedPoset(p.rank(), std::move(ranks), std::move(labels), p.hasse());
  return v;
}

} // namespace maniplex
