#include "sqa/fixtures.hpp"

#include <map>
#include <sstream>

#include "sqa/errors.hpp"
#include "sqa/ypq.hpp"

namespace sqa::fixtures {

namespace {

using C = ArrowClass;

TorusQuiver grid(int n, int m, int shift, const std::vector<GridPos>& pos) {
  TorusQuiver q;
  q.n = n;
  q.m = m;
  q.shift = shift;
  q.pos = pos;
  return q;
}

struct GridArrow {
  int col, row;
  ArrowClass cls;
};

void add_all(TorusQuiver& q, const std::vector<GridArrow>& arrows) {
  for (const auto& a : arrows) q.add_arrow_at(a.col, a.row, a.cls);
}

struct ArrowDef {
  std::string name;
  int tail, head;
};

// Words are arrow names separated by spaces, leftmost traversed last.
Algebra named_algebra(int vertices, const std::vector<ArrowDef>& arrows,
                      const std::vector<std::pair<std::string, int>>& terms) {
  Algebra A;
  A.quiver.num_vertices = vertices;
  for (const auto& a : arrows) A.quiver.add_arrow(a.tail, a.head, a.name);
  for (const auto& [word, coeff] : terms) {
    std::vector<int> cycle;
    std::istringstream in(word);
    std::string tok;
    while (in >> tok) {
      auto id = A.quiver.find_arrow(tok);
      if (!id) throw UnknownArrow(tok);
      cycle.push_back(*id);
    }
    A.W.add_cycle(cycle, coeff);
  }
  check_superpotential(A.quiver, A.W);
  A.grading = unit_grading(A.quiver);
  return A;
}

}  // namespace

TorusQuiver three_loop() {
  TorusQuiver q = grid(1, 1, 0, {{0, 0}});
  q.add_arrow(1, 1, C::W, "x");
  q.add_arrow(1, 1, C::N, "y");
  q.add_arrow(1, 1, C::SE, "z");
  return q;
}

TorusQuiver conifold() {
  TorusQuiver q = grid(2, 1, 1, {{0, 0}, {1, 0}});
  q.add_arrow(1, 2, C::N, "y1");
  q.add_arrow(2, 1, C::E, "x1");
  q.add_arrow(1, 2, C::S, "y2");
  q.add_arrow(2, 1, C::W, "x2");
  return q;
}

TorusQuiver y44() {
  TorusQuiver q = grid(2, 4, 0, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  for (int r = 0; r < 4; ++r) add_all(q, {{0, r, C::E}, {2, r, C::W}});
  for (int r = 0; r < 4; ++r) add_all(q, {{0, r, C::S}, {1, r, C::S}});
  for (int r = 0; r < 4; ++r) add_all(q, {{1, r, C::NW}, {1, r, C::NE}});
  return q;
}

TorusQuiver y43() {
  TorusQuiver q = grid(2, 4, 1, {{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 0}});
  add_all(q, {{1, 0, C::W}, {1, 0, C::E}});
  for (int r = 1; r < 4; ++r) add_all(q, {{0, r, C::E}, {2, r, C::W}});
  add_all(q, {{0, 0, C::N}, {1, 1, C::S}});
  for (int r = 1; r < 4; ++r) add_all(q, {{0, r + 1, C::S}, {1, r + 1, C::S}});
  for (int r = 1; r < 4; ++r) add_all(q, {{1, r, C::NW}, {1, r, C::NE}});
  return q;
}

TorusQuiver y42_left() {
  TorusQuiver q = grid(2, 4, 0, {{1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 0}});
  for (int r = 0; r < 4; ++r) add_all(q, {{0, r, C::E}, {0, r, C::W}});
  add_all(q, {{0, 0, C::N}, {1, 0, C::N}});
  for (int r = 1; r < 4; ++r) add_all(q, {{0, r + 1, C::S}, {1, r + 1, C::S}});
  add_all(q, {{1, 1, C::SW}, {1, 1, C::SE}, {1, 1, C::NW}, {1, 1, C::NE}});
  for (int r = 2; r < 4; ++r) add_all(q, {{1, r, C::NW}, {1, r, C::NE}});
  return q;
}

TorusQuiver y42_right() {
  TorusQuiver q = grid(2, 4, 0, {{1, 0}, {1, 1}, {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 0}});
  add_all(q, {{0, 0, C::E}, {0, 0, C::W}});
  add_all(q, {{1, 1, C::W}, {1, 1, C::E}});
  for (int r = 2; r < 4; ++r) add_all(q, {{0, r, C::E}, {0, r, C::W}});
  add_all(q, {{0, 1, C::S}, {1, 0, C::N}, {0, 1, C::N}, {1, 2, C::S}});
  add_all(q, {{0, 3, C::S}, {1, 3, C::S}, {0, 4, C::S}, {1, 4, C::S}});
  for (int r = 2; r < 4; ++r) add_all(q, {{1, r, C::NW}, {1, r, C::NE}});
  return q;
}

TorusQuiver non_noetherian() {
  TorusQuiver q = grid(4, 4, 0,
                       {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}, {1, 1},
                        {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}});
  add_all(q, {{0, 1, C::S}, {0, 1, C::N}, {0, 3, C::S}, {0, 3, C::N}});
  add_all(q, {{1, 1, C::S}, {1, 1, C::N}, {1, 3, C::S}, {1, 3, C::N}});
  add_all(q, {{2, 0, C::N}, {2, 2, C::S}, {2, 2, C::N}, {2, 4, C::S}});
  add_all(q, {{3, 0, C::N}, {3, 2, C::S}, {3, 2, C::N}, {3, 4, C::S}});
  add_all(q, {{0, 0, C::E}, {1, 0, C::E}, {3, 0, C::W}, {4, 0, C::W}});
  add_all(q, {{0, 1, C::E}, {2, 1, C::W}, {3, 1, C::W}, {3, 1, C::E}});
  add_all(q, {{0, 2, C::E}, {1, 2, C::E}, {3, 2, C::W}, {4, 2, C::W}});
  add_all(q, {{0, 3, C::E}, {2, 3, C::W}, {3, 3, C::W}, {3, 3, C::E}});
  add_all(q, {{1, 0, C::NW}, {1, 2, C::SW}, {1, 2, C::NW}, {1, 4, C::SW}});
  add_all(q, {{2, 1, C::SE}, {2, 1, C::NE}, {2, 3, C::SE}, {2, 3, C::NE}});
  return q;
}

Quiver y40_planar() {
  Quiver q;
  q.num_vertices = 8;
  const std::vector<std::pair<int, std::vector<int>>> out{
      {1, {7, 3}}, {2, {3, 3, 4}}, {3, {8, 8, 5}}, {4, {5, 5}},
      {5, {6, 6, 2, 2}}, {6, {7, 7, 4}}, {7, {8, 8, 5}}, {8, {1, 1, 6, 2}}};
  for (const auto& [t, heads] : out)
    for (int h : heads) q.add_arrow(t, h);
  return q;
}

std::vector<std::vector<Monomial4>> y40_module_generators() {
  return {
      {},
      {{0, 0, 0, 0}},
      {{1, 0, 2, 1}, {0, 1, 2, 1}, {3, 0, 5, 0}, {2, 1, 5, 0}, {1, 2, 5, 0}, {0, 3, 5, 0}},
      {{0, 0, 1, 0}, {2, 0, 0, 3}, {1, 1, 0, 3}, {0, 2, 0, 3}},
      {{1, 0, 1, 3}, {0, 1, 1, 3}, {1, 0, 3, 1}, {0, 1, 3, 1}},
      {{0, 0, 2, 0}, {0, 0, 0, 2}},
      {{1, 0, 1, 2}, {0, 1, 1, 2}, {1, 0, 3, 0}, {0, 1, 3, 0}},
      {{0, 0, 0, 1}, {2, 0, 3, 0}, {1, 1, 3, 0}, {0, 2, 3, 0}},
      {{1, 0, 1, 1}, {0, 1, 1, 1}, {3, 0, 4, 0}, {2, 1, 4, 0}, {1, 2, 4, 0}, {0, 3, 4, 0}},
  };
}

Algebra a2b() { return named_algebra(1, {{"a", 1, 1}, {"b", 1, 1}}, {{"a a b", 1}}); }

Algebra c1ba_c2ab() {
  return named_algebra(2, {{"c1", 1, 1}, {"a", 1, 2}, {"c2", 2, 2}, {"b", 2, 1}},
                       {{"c1 b a", 1}, {"c2 a b", -1}});
}

Algebra six_vertex() {
  return named_algebra(6,
                       {{"x1", 1, 4}, {"x2", 2, 6}, {"x3", 3, 2}, {"x4", 4, 5}, {"x5", 5, 1}, {"x6", 6, 3},
                        {"y1", 1, 6}, {"y2", 2, 4}, {"y3", 3, 1}, {"y4", 4, 3}, {"y5", 5, 2}, {"y6", 6, 5}},
                       {{"x6 x2 x3", 1}, {"y3 y4 x1", 1}, {"x5 y6 y1", 1}, {"y5 x4 y2", 1},
                        {"x6 y1 y3", -1}, {"y4 y2 x3", -1}, {"x2 y5 y6", -1}, {"x5 x4 x1", -1}});
}

Algebra one_loop_cubic() { return named_algebra(1, {{"x", 1, 1}}, {{"x x x", 1}}); }

Algebra second_family_n1() {
  Algebra A = named_algebra(5,
                            {{"d1", 1, 3}, {"b1", 3, 2}, {"a1", 2, 1}, {"b2", 3, 4}, {"c", 4, 5}, {"a2", 5, 1}},
                            {{"a1 b1 d1", 1}, {"a2 c b2 d1", -1}});
  A.grading[*A.quiver.find_arrow("b1") - 1] = 2;
  return A;
}

std::vector<NamedTorusQuiver> torus_fixtures() {
  return {{"three_loop", three_loop()},   {"conifold", conifold()},
          {"y44", y44()},                 {"y43", y43()},
          {"y42_left", y42_left()},       {"y42_right", y42_right()},
          {"non_noetherian", non_noetherian()}, {"y21", generate_ypq(2, 1)}};
}

}  // namespace sqa::fixtures
