#pragma once

#include <string>
#include <vector>

#include "sqa/monomial.hpp"
#include "sqa/path_algebra.hpp"
#include "sqa/quiver.hpp"

namespace sqa::fixtures {

// One vertex, arrows x (W), y (N), z (SE) on a 1x1 grid.
TorusQuiver three_loop();
// Two vertices on a 2x1 grid with shift 1; arrows y1, x1, y2, x2.
TorusQuiver conifold();

TorusQuiver y44();
TorusQuiver y43();
TorusQuiver y42_left();
TorusQuiver y42_right();

// 4x4 grid whose corner rings differ at vertex 2.
TorusQuiver non_noetherian();

// Planar drawing of the Y^{4,0} quiver with two double configurations.
Quiver y40_planar();
// Listed generators of tau(e_i A e_1) over the center, index i (entry 0 unused).
std::vector<std::vector<Monomial4>> y40_module_generators();

Algebra a2b();             // one vertex, loops a, b, W = aab
Algebra c1ba_c2ab();       // W = c1ba - c2ab
Algebra six_vertex();      // planar square superpotential on 6 vertices
Algebra one_loop_cubic();  // W = xxx
Algebra second_family_n1();  // W = a1b1d1 - a2cb2d1 with w(b1) = 2

struct NamedTorusQuiver {
  std::string name;
  TorusQuiver quiver;
};

// Every torus fixture, for the CLI and batch checks.
std::vector<NamedTorusQuiver> torus_fixtures();

}  // namespace sqa::fixtures
