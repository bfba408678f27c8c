#include "maniplex/coset.hpp"

#include <cstdlib>
#include <string>

namespace maniplex {

void check_presentation(const Presentation& p) {
  if (p.generators < 1) throw std::invalid_argument("presentation needs a generator");
  for (const Word& r : p.relators) {
    if (r.empty()) throw std::invalid_argument("empty relator");
    for (int x : r)
      if (x < 0 || x >= p.generators)
        throw std::invalid_argument("relator letter " + std::to_string(x) + " out of range");
  }
}

Word power(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Presentation string_presentation(const std::vector<int>& schlafli, std::vector<Word> extra) {
  Presentation p;
  p.generators = static_cast<int>(schlafli.size()) + 1;
  for (int i = 0; i < p.generators; ++i) p.relators.push_back({i, i});
  for (int i = 0; i + 1 < p.generators; ++i) p.relators.push_back(power({i, i + 1}, schlafli[i]));
  for (int i = 0; i < p.generators; ++i)
    for (int j = i + 2; j < p.generators; ++j) p.relators.push_back(power({i, j}, 2));
  for (auto& w : extra) p.relators.push_back(std::move(w));
  return p;
}

std::size_t default_coset_cap() {
  if (const char* env = std::getenv("MANIPLEX_COSET_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

namespace {

constexpr long undefined = -1;

// Columns 2g and 2g+1 hold the action of g and g^-1.
class Enumerator {
public:
  Enumerator(int generators, std::size_t cap) : columns_(2 * generators), cap_(cap) {
    new_coset();
  }

  void scan_and_fill(long c, const std::vector<int>& w) {
    long f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != undefined) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) != undefined) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        set(b, w[i] ^ 1, f);
        return;
      }
      define(f, w[i]);
    }
  }

  void define(long c, int x) {
    long d = new_coset();
    set(c, x, d);
    set(d, x ^ 1, c);
  }

  bool alive(long c) const { return parent_[c] == c; }
  long count() const { return static_cast<long>(parent_.size()); }
  long at(long c, int x) const { return table_[c * columns_ + x]; }
  int columns() const { return columns_; }

private:
  long new_coset() {
    if (parent_.size() >= cap_)
      throw CosetCapExceeded("coset enumeration exceeded the cap of " + std::to_string(cap_) +
                             " cosets");
    long d = static_cast<long>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + columns_, undefined);
    return d;
  }

  void set(long c, int x, long d) { table_[c * columns_ + x] = d; }

  long rep(long k) {
    long r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      long next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(long k, long l, std::vector<long>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(long a, long b) {
    std::vector<long> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      long e = queue[q];
      for (int x = 0; x < columns_; ++x) {
        long f = at(e, x);
        if (f == undefined) continue;
        set(f, x ^ 1, undefined);
        long e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != undefined) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1) != undefined) {
          merge(e1, at(f1, x ^ 1), queue);
        } else {
          set(e1, x, f1);
          set(f1, x ^ 1, e1);
        }
      }
    }
  }

  int columns_;
  std::size_t cap_;
  std::vector<long> table_;
  std::vector<long> parent_;
};

std::vector<int> to_columns(const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (int g : w) cols.push_back(2 * g);
  return cols;
}

} // namespace

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                           std::size_t cap) {
  check_presentation(p);
  for (const Word& w : subgroup)
    for (int x : w)
      if (x < 0 || x >= p.generators)
        throw std::invalid_argument("subgroup generator letter out of range");

  Enumerator e(p.generators, cap);
  for (const Word& w : subgroup)
    if (!w.empty()) e.scan_and_fill(0, to_columns(w));
  std::vector<std::vector<int>> relators;
  for (const Word& r : p.relators) relators.push_back(to_columns(r));

  for (long c = 0; c < e.count(); ++c) {
    for (const auto& r : relators) {
      if (!e.alive(c)) break;
      e.scan_and_fill(c, r);
    }
    for (int x = 0; x < e.columns() && e.alive(c); ++x)
      if (e.at(c, x) == undefined) e.define(c, x);
  }

  // Standardize: breadth-first from coset 0.
  std::vector<long> order{0};
  std::vector<long> number(e.count(), -1);
  number[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    long c = order[head];
    for (int g = 0; g < p.generators; ++g) {
      long d = e.at(c, 2 * g);
      if (number[d] < 0) {
        number[d] = static_cast<long>(order.size());
        order.push_back(d);
      }
    }
  }
  CosetTable t;
  t.index = order.size();
  t.action.assign(p.generators, std::vector<Flag>(t.index));
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int g = 0; g < p.generators; ++g)
      t.action[g][k] = static_cast<Flag>(number[e.at(order[k], 2 * g)]);
  return t;
}

Maniplex coset_graph(const CosetTable& t) {
  return Maniplex(static_cast<int>(t.action.size()), t.action);
}

} // namespace maniplex
