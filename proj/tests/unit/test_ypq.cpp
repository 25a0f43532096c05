#include "doctest.h"

#include <cmath>
#include <set>

#include "sqa/errors.hpp"
#include "sqa/fixtures.hpp"
#include "sqa/impression.hpp"
#include "sqa/toric.hpp"
#include "sqa/ypq.hpp"

using namespace sqa;

namespace {

std::vector<TileSequence> all_sequences(int p) {
  std::vector<TileSequence> out;
  int total = 1;
  for (int k = 0; k < p; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<Tile> t;
    for (int k = 0, c = code; k < p; ++k, c /= 3) t.push_back(static_cast<Tile>(c % 3));
    for (int shift : {0, 1}) out.push_back({t, shift});
  }
  return out;
}

Monomial4 swap_y(Monomial4 m) {
  std::swap(m[2], m[3]);
  return m;
}

}  // namespace

TEST_CASE("tile parsing") {
  CHECK(parse_tiles("P, A b") == std::vector<Tile>{Tile::Plain, Tile::DiagA, Tile::DiagB});
  CHECK(tiles_string(parse_tiles("paab")) == "PAAB");
  CHECK_THROWS_AS(parse_tiles("PX"), ParseError);
}

TEST_CASE("q count") {
  CHECK(q_of({parse_tiles("AAAA"), 0}) == 4);
  CHECK(double_configurations({parse_tiles("AAAA"), 0}) == 0);
  CHECK(q_of({parse_tiles("PPPP"), 0}) == 0);
  CHECK(q_of({parse_tiles("PAAA"), 1}) == 3);
  CHECK(q_of({parse_tiles("PPAA"), 0}) == 2);
  CHECK(q_of({parse_tiles("BAAA"), 0}) == 2);
  CHECK(double_configurations({parse_tiles("ABBA"), 0}) == 2);
  CHECK(q_of({parse_tiles("ABBA"), 0}) == 0);
}

TEST_CASE("canonical quivers") {
  CHECK(isomorphic(generate_ypq(1, 0).quiver(), fixtures::conifold().quiver()));
  TorusQuiver y42 = generate_ypq(4, 2);
  CHECK((isomorphic(y42.quiver(), fixtures::y42_left().quiver()) ||
         isomorphic(y42.quiver(), fixtures::y42_right().quiver())));
  CHECK(isomorphic(generate_ypq(4, 4).quiver(), fixtures::y44().quiver()));
  CHECK(isomorphic(generate_ypq(4, 3).quiver(), fixtures::y43().quiver()));
  for (int p = 1; p <= 6; ++p)
    for (int q = 0; q <= p; ++q) {
      TileSequence s = canonical_tiles(p, q);
      CHECK(q_of(s) == q);
      TorusQuiver t = generate_ypq(p, q);
      CHECK(validate_square(t).ok);
      CHECK(t.num_vertices() == 2 * p);
    }
}

TEST_CASE("generator errors") {
  CHECK_THROWS_AS(generate_ypq(2, 3), InvalidPQ);
  CHECK_THROWS_AS(generate_ypq(0, 0), InvalidPQ);
  CHECK_THROWS_AS(generate_ypq(3, 1, TileSequence{parse_tiles("PA"), 1}), TileMismatch);
  CHECK_THROWS_AS(generate_ypq(4, 4, TileSequence{parse_tiles("PPAA"), 0}), TileMismatch);
  // a shift-1 seam needs an odd number of plain tiles
  CHECK_FALSE(assemble_tiles({parse_tiles("ABPP"), 1}).has_value());
  CHECK(assemble_tiles({parse_tiles("ABPP"), 0}).has_value());
}

TEST_CASE("the q count predicts the center of every assemblable sequence") {
  for (int p = 1; p <= 4; ++p)
    for (const TileSequence& s : all_sequences(p)) {
      auto t = assemble_tiles(s);
      if (!t) continue;
      const int q = q_of(s);
      INFO(tiles_string(s.tiles) << ":" << s.shift);
      REQUIRE(q >= 0);
      REQUIRE(q <= p);
      // sequences dominated by B tiles realise the mirror image y1 <-> y2
      CenterComparison c = compare_center_with_formula(*t, p, q, 2 * p + 4);
      if (!c.equal) {
        std::vector<Monomial4> mirrored;
        for (const auto& g : c.computed) mirrored.push_back(swap_y(g));
        ExponentMonoid F = ypq_center_formula(p, q);
        CHECK(monoids_equal(ExponentMonoid(mirrored), F));
      }
    }
}

TEST_CASE("a Y40 with two double configurations") {
  TorusQuiver t = *assemble_tiles({parse_tiles("ABBA"), 0});
  CHECK(isomorphic(t.quiver(), fixtures::y40_planar()));
  CHECK(compare_center_with_formula(t, 4, 0, 12).equal);
  CHECK_FALSE(isomorphic(t.quiver(), generate_ypq(4, 0).quiver()));
  CHECK(compare_center_with_formula(generate_ypq(4, 0), 4, 0, 12).equal);
}

TEST_CASE("center formula") {
  ExponentMonoid conifold({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}});
  CHECK(monoids_equal(ypq_center_formula(1, 0), conifold));

  ExponentMonoid y21 = ypq_center_formula(2, 1);
  for (const Monomial4& g : std::vector<Monomial4>{{3, 0, 2, 0}, {2, 1, 2, 0}, {1, 2, 2, 0}, {0, 3, 2, 0},
                                                   {1, 0, 0, 2}, {0, 1, 0, 2}})
    CHECK(y21.contains(g));

  std::vector<Monomial4> y2_family;
  const ExponentMonoid y33 = ypq_center_formula(3, 3);
  for (const auto& g : y33.generators())
    if (g[2] == 0) y2_family.push_back(g);
  CHECK(y2_family == std::vector<Monomial4>{{0, 0, 0, 3}});

  for (auto [p, q] : {std::pair{1, 0}, {2, 1}, {3, 1}, {4, 2}, {4, 3}, {4, 4}})
    CHECK_MESSAGE(center_matches_formula(p, q, 2 * p + 4), p << "," << q);
}

TEST_CASE("R-charges") {
  RChargeTable t = rcharge_table(2, 1);
  CHECK(std::abs(t.x1y1 - (-1 + std::sqrt(13.0)) / 3) < 1e-12);
  CHECK(std::abs(t.y2 - (-3 + std::sqrt(13.0))) < 1e-12);
  for (int p = 1; p <= 10; ++p)
    for (int q = 1; q <= p; ++q) {
      RChargeTable r = rcharge_table(p, q);
      CHECK(std::abs(r.x1y1 - r.x1 - r.y1) < 1e-9);
      CHECK(std::abs(r.x1y2 - r.x1 - r.y2) < 1e-9);
      // a unit cycle has charge 2
      CHECK(std::abs(2 * r.x1 + r.y1 + r.y2 - 2) < 1e-9);
    }
  CHECK_THROWS_AS(rcharge_table(2, 0), InvalidPQ);
}

TEST_CASE("torus action") {
  TorusWeights w = torus_action_weights(1, 0);
  CHECK(w.lambda == std::array<int, 4>{-1, -1, 1, 1});
  CHECK(w.omega_order == 1);
  const ExponentMonoid conifold = ypq_center_formula(1, 0);
  for (const auto& g : conifold.generators()) CHECK(invariant_under(w, g));
  CHECK_FALSE(invariant_under(w, {1, 0, 0, 0}));

  for (int p = 1; p <= 6; ++p)
    for (int q = 0; q <= p; ++q) {
      TorusWeights wp = torus_action_weights(p, q);
      const ExponentMonoid Z = ypq_center_formula(p, q);
      for (const auto& g : Z.generators()) CHECK(invariant_under(wp, g));
    }
}
