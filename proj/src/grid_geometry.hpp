#pragma once

#include <vector>

#include "sqa/quiver.hpp"

namespace sqa::grid {

// Geometric edges of the torus grid, keyed by kind and the normalized anchor
// vertex. Forward directions: H east, V north, D1 north-east, D2 north-west
// (D2 joins anchor + (1,0) to anchor + (0,1)).
enum EdgeKind { H = 0, V = 1, D1 = 2, D2 = 3 };

inline int edge_index(int kind, int anchor, int num_vertices) {
  return kind * num_vertices + anchor - 1;
}

struct EdgeUse {
  int edge;
  int sign;  // +1 when traversed in the forward direction
};

// Edge carrying an arrow, with +1 if the arrow points forward.
EdgeUse arrow_edge(const TorusQuiver& q, const TorusArrow& a);

// Faces of the unit square at anchor, each listed counterclockwise.
// diagonal: 0 none, 1 D1, 2 D2.
std::vector<std::vector<EdgeUse>> square_faces(const TorusQuiver& q, int anchor, int diagonal);

}  // namespace sqa::grid
