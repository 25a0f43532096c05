#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "sqa/errors.hpp"
#include "sqa/fixtures.hpp"
#include "sqa/impression.hpp"
#include "sqa/path_algebra.hpp"

using namespace sqa;
using testing::arrow;
using testing::el;

namespace {

Superpotential cycles(const Quiver& q, std::initializer_list<std::pair<const char*, int>> terms) {
  Superpotential W;
  for (const auto& [names, c] : terms) W.add_cycle(testing::path_of(q, names).arrows, c);
  return W;
}

// +1 or -1 when W equals +-expected, 0 otherwise.
int sign_against(const Superpotential& W, const Superpotential& expected) {
  if (W == expected) return 1;
  if (W == -expected) return -1;
  return 0;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

TEST_CASE("square superpotentials") {
  TorusQuiver t = fixtures::three_loop();
  Quiver q = t.quiver();
  CHECK(sign_against(build_square_superpotential(t), cycles(q, {{"x y z", 1}, {"z y x", -1}})) != 0);

  TorusQuiver c = fixtures::conifold();
  Quiver cq = c.quiver();
  CHECK(sign_against(build_square_superpotential(c), cycles(cq, {{"y1 x2 y2 x1", 1}, {"y2 x2 y1 x1", -1}})) != 0);
  CHECK_NOTHROW(check_superpotential(cq, build_square_superpotential(c)));
}

TEST_CASE("cyclic rotation is canonical") {
  CHECK(canonical_rotation({3, 1, 2}) == std::vector<int>{1, 2, 3});
  CHECK(canonical_rotation({2, 3, 1}) == canonical_rotation({1, 2, 3}));
  Superpotential a, b;
  a.add_cycle({1, 2, 3}, 1);
  b.add_cycle({2, 3, 1}, 1);
  CHECK(a == b);
}

TEST_CASE("cyclic derivatives") {
  TorusQuiver t = fixtures::three_loop();
  Quiver q = t.quiver();
  Superpotential W = cycles(q, {{"x y z", 1}, {"z y x", -1}});
  CHECK(cyclic_derivative(q, W, arrow(q, "z")) == el(q, "x y") - el(q, "y x"));
  CHECK(cyclic_derivative(q, W, arrow(q, "x")) == el(q, "y z") - el(q, "z y"));

  TorusQuiver c = fixtures::conifold();
  Quiver cq = c.quiver();
  Superpotential Wc = cycles(cq, {{"y1 x2 y2 x1", 1}, {"y2 x2 y1 x1", -1}});
  CHECK(cyclic_derivative(cq, Wc, arrow(cq, "x1")) == el(cq, "y1 x2 y2") - el(cq, "y2 x2 y1"));
  CHECK(cyclic_derivative(cq, Wc, arrow(cq, "y1")) == el(cq, "x2 y2 x1") - el(cq, "x1 y2 x2"));

  Superpotential only_xy = cycles(q, {{"x y", 1}});
  CHECK(cyclic_derivative(q, only_xy, arrow(q, "z")).is_zero());
}

TEST_CASE("delta operators") {
  Quiver q = fixtures::three_loop().quiver();
  const int x = arrow(q, "x"), y = arrow(q, "y");
  CHECK(delta_left(q, x, el(q, "x y")) == el(q, "y"));
  CHECK(delta_left(q, x, el(q, "z y")).is_zero());
  CHECK(delta_right(q, el(q, "x y"), y) == el(q, "x"));
  CHECK(delta_left(q, x, el(q, "x")) == AlgebraElement(vertex_path(1)));
}

TEST_CASE("second derivatives of the conifold superpotential") {
  TorusQuiver c = fixtures::conifold();
  Quiver cq = c.quiver();
  Superpotential W = build_square_superpotential(c);
  const int s = sign_against(W, cycles(cq, {{"y1 x2 y2 x1", 1}, {"y2 x2 y1 x1", -1}}));
  REQUIRE(s != 0);
  const int y1 = arrow(cq, "y1"), x1 = arrow(cq, "x1"), x2 = arrow(cq, "x2");
  CHECK(w_hg(cq, W, x1, y1) == el(cq, "y2 x2", -s));
  CHECK(w_hg(cq, W, x2, y1) == el(cq, "y2 x1", s));
  CHECK_THROWS_AS(w_hg(cq, W, y1, y1), MismatchedVertex);
}

TEST_CASE("inhomogeneous relations are rejected") {
  Algebra A;
  A.quiver.num_vertices = 1;
  A.quiver.add_arrow(1, 1, "x");
  A.quiver.add_arrow(1, 1, "y");
  A.W = cycles(A.quiver, {{"x x x", 1}, {"x y", 1}});
  A.grading = unit_grading(A.quiver);
  CHECK_THROWS_AS(GradedAlgebra{A}, InhomogeneousRelations);
}

TEST_CASE("graded dimensions") {
  TorusQuiver c = fixtures::conifold();
  GradedAlgebra A(square_algebra(c));
  Impression tau = build_tau(c);

  CHECK(A.dim(1, 2, 1) == 2);
  CHECK(graded_basis(A, 1, 2, 1).size() == 2);

  SUBCASE("conifold e2 A e1 in degree 3 against distinct monomials") {
    std::set<Monomial4> seen;
    int paths = 0;
    for (const Path& p : A.paths(1, 3))
      if (p.head == 2) {
        ++paths;
        seen.insert(tau_path(p, tau));
      }
    CHECK(paths == 8);
    CHECK(A.dim(1, 2, 3) == static_cast<int>(seen.size()));
    CHECK(A.dim(1, 2, 3) == 6);
  }

  SUBCASE("conifold hilbert function") {
    // corner ring k[a,b,c,d]/(ab - cd) and R-module with one more y than x
    for (int k = 0; k <= 3; ++k) {
      CHECK(A.dim(1, 1, 2 * k) == (k + 1) * (k + 1));
      CHECK(A.dim(1, 2, 2 * k + 1) == (k + 1) * (k + 2));
      CHECK(A.dim(1, 2, 2 * k) == 0);
    }
  }

  SUBCASE("three loop is commutative polynomial") {
    // z = x1y2 has weight 2, so count x^a y^b z^c with a + b + 2c = d
    GradedAlgebra B(square_algebra(fixtures::three_loop()));
    for (int d = 0; d <= 6; ++d) {
      int count = 0;
      for (int c = 0; 2 * c <= d; ++c) count += d - 2 * c + 1;
      CHECK(B.dim(1, 1, d) == count);
    }
  }

  SUBCASE("three loop with unit weights") {
    Algebra U = square_algebra(fixtures::three_loop());
    U.grading = unit_grading(U.quiver);
    GradedAlgebra B(U);
    for (int d = 0; d <= 4; ++d) CHECK(B.dim(1, 1, d) == binom(d + 2, 2));
  }
}

TEST_CASE("equality modulo relations") {
  TorusQuiver c = fixtures::conifold();
  GradedAlgebra A(square_algebra(c));
  const Quiver& q = A.quiver();
  CHECK(equal_mod_relations(A, el(q, "y1 x2 y2"), el(q, "y2 x2 y1")));
  CHECK(equal_mod_relations(A, el(q, "y1 x1 y2"), el(q, "y1 x1 y2")));
  CHECK_FALSE(equal_mod_relations(A, el(q, "y1"), el(q, "y2")));
  CHECK_FALSE(equal_mod_relations(A, el(q, "y1 x1 y2"), el(q, "y1 x2 y2")));
  for (const auto& r : A.relations()) CHECK(A.is_zero(r));
}

TEST_CASE("path composition") {
  Quiver q = fixtures::conifold().quiver();
  Path a = testing::path_of(q, "x1");
  Path b = testing::path_of(q, "y1");
  CHECK(composable(a, b));
  CHECK_FALSE(composable(a, a));
  Path ab = concat(a, b);
  CHECK(ab.tail == 1);
  CHECK(ab.head == 1);
  CHECK(ab.arrows == std::vector<int>{arrow(q, "x1"), arrow(q, "y1")});
  CHECK_THROWS_AS(path_from(q, {arrow(q, "x1"), arrow(q, "x2")}), InvalidQuiver);
}

TEST_CASE("superpotential json round trip") {
  Superpotential W = build_square_superpotential(fixtures::y42_left());
  CHECK(parse_superpotential_json(superpotential_json(W)) == W);
  CHECK_THROWS_AS(parse_superpotential_json("[1, 2"), ParseError);
}
