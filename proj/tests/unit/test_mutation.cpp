#include "doctest.h"

#include <map>
#include <tuple>

#include "sqa/errors.hpp"
#include "sqa/fixtures.hpp"
#include "sqa/impression.hpp"
#include "sqa/mutation.hpp"
#include "sqa/quiver.hpp"

using namespace sqa;
using C = ArrowClass;

namespace {

using Key = std::tuple<int, int, C>;

// Vertices of a 3x3 patch, numbered row by row from the bottom left; i is vertex 5.
TorusQuiver patch(const std::vector<Key>& arrows) {
  TorusQuiver q = empty_grid(3, 3, 0);
  for (const auto& [t, h, c] : arrows) q.add_arrow(t, h, c);
  return q;
}

std::map<Key, int> multiset(const TorusQuiver& q) {
  std::map<Key, int> m;
  for (const auto& a : q.arrows) m[{a.tail, a.head, a.cls}]++;
  return m;
}

std::map<Key, int> multiset(const std::vector<Key>& v) {
  std::map<Key, int> m;
  for (const auto& k : v) m[k]++;
  return m;
}

// Patches are not square on the torus, so labels come straight from the classes.
TorusQuiver tau_mutated(const TorusQuiver& q, int i) {
  Impression tau;
  for (const auto& a : q.arrows) tau.label.push_back(class_label(a.cls));
  return tau_mutate(q, tau, i, false).first;
}

}  // namespace

TEST_CASE("tau mutation at a degree 2 vertex adds composites and cancels 2-cycles") {
  TorusQuiver before = patch({{2, 1, C::W}, {2, 3, C::E}, {1, 4, C::N}, {4, 5, C::E}, {5, 2, C::S}, {6, 5, C::W},
                              {3, 6, C::N}, {7, 4, C::S}, {5, 8, C::N}, {9, 6, C::S}, {8, 7, C::W}, {8, 9, C::E}});
  std::vector<Key> after{{2, 1, C::W},  {2, 3, C::E}, {1, 4, C::N},  {4, 2, C::SE}, {2, 5, C::N},  {5, 4, C::W},
                         {5, 6, C::E},  {6, 2, C::SW}, {3, 6, C::N}, {7, 4, C::S},  {4, 8, C::NE}, {8, 7, C::W},
                         {8, 5, C::S},  {6, 8, C::NW}, {8, 9, C::E}, {9, 6, C::S}};
  TorusQuiver got = tau_mutated(before, 5);
  CHECK(multiset(got) == multiset(after));
  // and back again
  CHECK(multiset(tau_mutated(got, 5)) == multiset(before));
  CHECK(isomorphic(got.quiver(), quiver_mutate(before.quiver(), 5)));
}

TEST_CASE("tau mutation fixes a self dual patch") {
  TorusQuiver q = patch({{2, 1, C::W}, {1, 5, C::NE}, {5, 4, C::W}, {4, 1, C::S}, {5, 2, C::S}, {5, 9, C::NE},
                         {9, 8, C::W}, {8, 5, C::S}, {9, 6, C::S}, {6, 5, C::W}});
  CHECK(multiset(tau_mutated(q, 5)) == multiset(q));
}

TEST_CASE("tau mutation turns the source into a sink") {
  TorusQuiver q = patch({{1, 5, C::NE}, {6, 5, C::W}, {8, 5, C::S}});
  TorusQuiver got = tau_mutated(q, 5);
  CHECK(multiset(got) == multiset(std::vector<Key>{{5, 4, C::W}, {5, 2, C::S}, {5, 9, C::NE}}));
  CHECK(multiset(tau_mutated(got, 5)) == multiset(q));
}

TEST_CASE("labels survive tau mutation") {
  TorusQuiver L = fixtures::y42_left();
  auto [t, tau] = tau_mutate(L, build_tau(L), 2);
  REQUIRE(tau.label.size() == t.arrows.size());
  for (const auto& a : t.arrows) CHECK(tau(a.id) == class_label(a.cls));
  CHECK(validate_square(t).ok);
  CHECK(isomorphic(t.quiver(), fixtures::y42_right().quiver()));
  CHECK(isomorphic(t.quiver(), quiver_mutate(L.quiver(), 2)));
}

TEST_CASE("tau mutation errors") {
  TorusQuiver L = fixtures::y42_left();
  Impression tau = build_tau(L);
  CHECK_THROWS_AS(tau_mutate(L, tau, 3), ClassUnresolvable);
  CHECK_THROWS_AS(tau_mutate(L, tau, 0), InvalidQuiver);
  TorusQuiver broken = L;
  broken.arrows.pop_back();
  Impression short_tau = build_tau(L);
  short_tau.label.pop_back();
  CHECK_THROWS_AS(tau_mutate(broken, short_tau, 2), NotSquare);
}

TEST_CASE("quiver mutation") {
  SUBCASE("fig 1 presentations of Y42") {
    Quiver m = quiver_mutate(fixtures::y42_left().quiver(), 2);
    CHECK(isomorphic(m, fixtures::y42_right().quiver()));
    CHECK(isomorphic(quiver_mutate(m, 2), fixtures::y42_left().quiver()));
  }
  SUBCASE("a source only has its arrows reversed") {
    Quiver q;
    q.num_vertices = 3;
    q.add_arrow(1, 2);
    q.add_arrow(1, 3);
    q.add_arrow(2, 3);
    Quiver m = quiver_mutate(q, 1);
    REQUIRE(m.arrows.size() == 3);
    CHECK(m.in_arrows(1).size() == 2);
    CHECK(m.out_arrows(1).empty());
  }
  SUBCASE("a path through the vertex gains its composite") {
    Quiver q;
    q.num_vertices = 3;
    q.add_arrow(1, 2, "a");
    q.add_arrow(2, 3, "b");
    Quiver m = quiver_mutate(q, 2);
    REQUIRE(m.arrows.size() == 3);
    int composite = 0;
    for (const auto& a : m.arrows) composite += a.tail == 1 && a.head == 3;
    CHECK(composite == 1);
    CHECK(m.find_arrow("a'").has_value());
  }
  SUBCASE("2-cycles cancel") {
    Quiver q;
    q.num_vertices = 3;
    q.add_arrow(1, 2);
    q.add_arrow(2, 3);
    q.add_arrow(3, 1);
    Quiver m = quiver_mutate(q, 2);
    CHECK(m.arrows.size() == 2);
  }
  SUBCASE("every degree 2 vertex of the fixtures") {
    for (const auto& f : fixtures::torus_fixtures()) {
      if (f.name == "non_noetherian" || f.name == "three_loop") continue;
      const Quiver q = f.quiver.quiver();
      for (int i = 1; i <= q.num_vertices; ++i) {
        if (q.in_arrows(i).size() != 2 || q.out_arrows(i).size() != 2) continue;
        INFO(f.name << " vertex " << i);
        auto [t, tau] = tau_mutate(f.quiver, build_tau(f.quiver), i);
        CHECK(validate_square(t).ok);
        CHECK(isomorphic(t.quiver(), quiver_mutate(q, i)));
        CHECK(isomorphic(quiver_mutate(quiver_mutate(q, i), i), q));
      }
    }
  }
}

TEST_CASE("the center does not see mutation") {
  CHECK(center_invariance_check(fixtures::y42_left(), fixtures::y42_right(), 12));
  CHECK_FALSE(center_invariance_check(fixtures::y43(), fixtures::y42_right(), 12));
}
