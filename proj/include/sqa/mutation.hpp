#pragma once

#include <utility>

#include "sqa/impression.hpp"
#include "sqa/quiver.hpp"

namespace sqa {

// Reverse the arrows at i, add t(a) -> h(b) for each path b e_i a, then cancel each
// new arrow against the lowest-id arrow running the other way. Loops at i are kept.
Quiver quiver_mutate(const Quiver& q, int i);

// Labels are kept arrow for arrow; the far endpoint of each replaced arrow and
// both endpoints of each composite are forced by the label's geometric class.
// A composite is added for the path b e_i a when the reversed route h(b) -> i -> t(a)
// exists after the arrows at i are replaced. New arrows then cancel against the
// lowest-id arrow of the complementary class running the other way.
// With validation requested, throws NotSquare when the input is not square or when a
// vertex of in/out degree 2 does not mutate to a square quiver. Throws ClassUnresolvable
// when a label has no class or lands off the grid.
std::pair<TorusQuiver, Impression> tau_mutate(const TorusQuiver& q, const Impression& tau, int i,
                                              bool validate_input = true);

// Equal center monomial sets up to degree D; throws NotHomogeneous.
bool center_invariance_check(const TorusQuiver& q1, const TorusQuiver& q2, int D);

}  // namespace sqa
