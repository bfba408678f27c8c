#pragma once

// Small reference maniplexes: toroidal maps {4,4}_(b,c) and a few spherical
// and projective polyhedra.

#include "maniplex/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace maniplex {

/// Flag graph of the square tessellation modulo the lattice spanned by (b,c)
/// and (-c,b). Flag index = 8*cell + 2*corner + side, corner = dx + 2*dy for
/// the corner (x+dx, y+dy) of cell (x,y), side 0 for the horizontal edge.
Maniplex torus_44(int b, int c);

/// "cube", "hemicube", "hemioctahedron", "octahedron" or "square".
Maniplex platonic(const std::string& name);

/// Every torus map with b, c >= 0 and 1 <= b^2 + c^2 <= max_norm, plus cube,
/// hemicube and hemioctahedron.
std::vector<std::pair<std::string, Maniplex>> rank3_corpus(int max_norm = 10);

} // namespace maniplex
