#pragma once

// Todd-Coxeter coset enumeration (HLT strategy) for finitely presented groups
// generated by involutions.

#include "maniplex/core.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace maniplex {

/// A word in the generators, read left to right; letters are generator indices.
using Word = std::vector<int>;

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
};

/// Throws std::invalid_argument for empty relators or out-of-range letters.
void check_presentation(const Presentation& p);

/// r_i^2 for all i, (r_i r_{i+1})^{p_i} for the Schlafli entries, (r_i r_j)^2
/// for |i-j| > 1, followed by `extra`.
Presentation string_presentation(const std::vector<int>& schlafli, std::vector<Word> extra = {});

/// w repeated k times.
Word power(const Word& w, int k);

class CosetCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Complete coset table. Cosets are numbered in breadth-first order from the
/// subgroup (coset 0), scanning generators in index order.
struct CosetTable {
  std::size_t index = 0;
  std::vector<std::vector<Flag>> action;  // action[g][coset] = coset * g
};

/// Default cap on defined cosets: 100000, or MANIPLEX_COSET_CAP when set.
std::size_t default_coset_cap();

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup = {},
                           std::size_t cap = default_coset_cap());

/// The permutation action as a coloured graph on the cosets.
Maniplex coset_graph(const CosetTable& t);

} // namespace maniplex
