#include "maniplex/corpus.hpp"

#include "maniplex/coset.hpp"

#include <map>
#include <stdexcept>

namespace maniplex {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

} // namespace

Maniplex torus_44(int b, int c) {
  if (b < 0 || c < 0 || (b == 0 && c == 0))
    throw std::invalid_argument("torus parameters must be non-negative and not both zero");
  const long n = static_cast<long>(b) * b + static_cast<long>(c) * c;
  // (x, y) -> (bx + cy, -cx + by) mod n has kernel exactly the lattice.
  auto key = [&](long x, long y) {
    return std::make_pair(mod(b * x + c * y, n), mod(-c * x + b * y, n));
  };
  std::map<std::pair<long, long>, Flag> cell_of;
  std::vector<std::pair<long, long>> rep;
  for (long y = 0; y < n; ++y)
    for (long x = 0; x < n; ++x)
      if (cell_of.emplace(key(x, y), static_cast<Flag>(rep.size())).second) rep.emplace_back(x, y);

  const std::size_t flags = 8 * rep.size();
  std::vector<std::vector<Flag>> perms(3, std::vector<Flag>(flags));
  auto index = [](Flag cell, int dx, int dy, int side) {
    return 8 * cell + 2 * static_cast<Flag>(dx + 2 * dy) + static_cast<Flag>(side);
  };
  for (Flag cell = 0; cell < rep.size(); ++cell) {
    auto [x, y] = rep[cell];
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx)
        for (int side = 0; side < 2; ++side) {
          Flag f = index(cell, dx, dy, side);
          perms[0][f] = side == 0 ? index(cell, 1 - dx, dy, side) : index(cell, dx, 1 - dy, side);
          perms[1][f] = index(cell, dx, dy, 1 - side);
          if (side == 0) {
            Flag other = cell_of.at(key(x, y + (dy ? 1 : -1)));
            perms[2][f] = index(other, dx, 1 - dy, side);
          } else {
            Flag other = cell_of.at(key(x + (dx ? 1 : -1), y));
            perms[2][f] = index(other, 1 - dx, dy, side);
          }
        }
  }
  return Maniplex(3, std::move(perms));
}

Maniplex platonic(const std::string& name) {
  const Word petrie{0, 1, 2};
  Presentation p;
  if (name == "cube") {
    p = string_presentation({4, 3});
  } else if (name == "hemicube") {
    p = string_presentation({4, 3}, {power(petrie, 3)});
  } else if (name == "octahedron") {
    p = string_presentation({3, 4});
  } else if (name == "hemioctahedron") {
    p = string_presentation({3, 4}, {power(petrie, 3)});
  } else if (name == "square") {
    p = string_presentation({4});
  } else {
    throw std::invalid_argument("unknown polytope '" + name + "'");
  }
  return coset_graph(coset_enumerate(p));
}

std::vector<std::pair<std::string, Maniplex>> rank3_corpus(int max_norm) {
  std::vector<std::pair<std::string, Maniplex>> out;
  for (int b = 0; b * b <= max_norm; ++b)
    for (int c = 0; b * b + c * c <= max_norm; ++c)
      if (b != 0 || c != 0)
        out.emplace_back("{4,4}_(" + std::to_string(b) + "," + std::to_string(c) + ")",
                         torus_44(b, c));
  for (const char* name : {"cube", "hemicube", "hemioctahedron"})
    out.emplace_back(name, platonic(name));
  return out;
}

} // namespace maniplex
