#include "doctest.h"

#include <set>

#include "sqa/errors.hpp"
#include "sqa/fixtures.hpp"
#include "sqa/impression.hpp"
#include "sqa/toric.hpp"
#include "sqa/ypq.hpp"

using namespace sqa;

namespace {

constexpr Monomial4 x1{1, 0, 0, 0}, x2{0, 1, 0, 0}, y1{0, 0, 1, 0}, y2{0, 0, 0, 1};

ExponentMonoid conifold_monoid() { return ExponentMonoid({x1 + y1, x2 + y2, x1 + y2, x2 + y1}); }

ExponentMonoid center_of(const TorusQuiver& t, int D) {
  return ExponentMonoid(center_generators(t.quiver(), build_tau(t), D));
}

Monomial4 evaluate(const std::vector<Monomial4>& gens, const std::vector<int>& mult) {
  Monomial4 v{};
  for (std::size_t k = 0; k < gens.size(); ++k) v = v + scaled(gens[k], mult[k]);
  return v;
}

}  // namespace

TEST_CASE("monoid rank") {
  CHECK(monoid_rank(conifold_monoid()) == 3);
  CHECK(monoid_rank(ExponentMonoid({x1, y1, x2 + y2})) == 3);
  CHECK(monoid_rank(ExponentMonoid({x1 + y1})) == 1);
  for (const auto& f : {fixtures::y44(), fixtures::y43(), fixtures::y42_left(), fixtures::y42_right()})
    CHECK(monoid_rank(center_of(f, 12)) == 3);
}

TEST_CASE("membership") {
  ExponentMonoid M = conifold_monoid();
  CHECK(M.contains({0, 0, 0, 0}));
  CHECK(M.contains({1, 1, 1, 1}));
  CHECK(M.contains({2, 0, 1, 1}));
  CHECK_FALSE(M.contains(x1));
  CHECK_FALSE(M.contains({2, 0, 0, 0}));
  CHECK(M.in_lattice({1, -1, 1, -1}));
  CHECK_FALSE(M.in_lattice(x1));
}

TEST_CASE("saturation") {
  CHECK(saturation_check(conifold_monoid(), 8).saturated);
  CHECK(saturation_check(ypq_center_formula(2, 1), 12).saturated);

  SaturationReport r = saturation_check(ExponentMonoid({{2, 0, 0, 0}, {3, 0, 0, 0}}), 12);
  CHECK_FALSE(r.saturated);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == x1);

  CHECK(saturation_check(ExponentMonoid({x1 + x1, x1 + y1, y1 + y1}), 10).saturated);
  SaturationReport hole = saturation_check(ExponentMonoid({x1 + x1, x1 + x1 + x1 + y1, y1 + y1}), 10);
  CHECK_FALSE(hole.saturated);
}

TEST_CASE("cone test") {
  ConeTest c({x1, y1});
  CHECK(c.rank() == 2);
  CHECK(c.contains({3, 0, 5, 0}));
  CHECK_FALSE(c.contains({1, 0, -1, 0}));
  CHECK_FALSE(c.contains(x2));
}

TEST_CASE("effective periods") {
  CHECK(effective_periods(2, 1, 1) == std::pair{2, 2});
  CHECK(effective_periods(2, 4, 0) == std::pair{2, 4});
  CHECK(effective_periods(2, 3, 1) == std::pair{2, 6});
}

TEST_CASE("regular sequence cycles") {
  for (auto [p, q] : {std::pair{1, 0}, {2, 1}, {3, 1}, {4, 2}, {4, 3}, {4, 4}}) {
    TorusQuiver t = generate_ypq(p, q);
    ExponentMonoid Z = center_of(t, 2 * p + 6);
    auto [n, m] = effective_periods(t.n, t.m, t.shift);
    RegularSequence rs = regular_sequence_cycles(Z, n, m);
    INFO("Y^{" << p << "," << q << "}");
    for (const auto& g : {rs.alpha1, rs.alpha2, rs.beta1, rs.beta2}) CHECK(Z.contains(g));
    CHECK(rs.sigma == kSigma);
    CHECK(rs.alpha1 == scaled(x1, rs.n) + scaled(y1 + y2, rs.t));
    CHECK(rs.alpha2 == scaled(x2, rs.n) + scaled(y1 + y2, rs.n - rs.t));
    CHECK(rs.beta1 == scaled(y1, rs.m) + scaled(x1 + x2, rs.s));
    CHECK(rs.beta2 == scaled(y2, rs.m) + scaled(x1 + x2, rs.m - rs.s));
    // t is minimal: no smaller exponent gives a center element
    for (int t2 = 0; t2 < rs.t; ++t2) CHECK_FALSE(Z.contains(scaled(x1, rs.n) + scaled(y1 + y2, t2)));
    for (int s2 = 0; s2 < rs.s; ++s2) CHECK_FALSE(Z.contains(scaled(y1, rs.m) + scaled(x1 + x2, s2)));
  }
  SUBCASE("Y42 beta1") {
    RegularSequence rs = regular_sequence_cycles(center_of(generate_ypq(4, 2), 14), 2, 4);
    CHECK(rs.beta1 == Monomial4{3, 3, 4, 0});
  }
  SUBCASE("Y44 reaches the t = 0 or t = n branch at beta2") {
    RegularSequence rs = regular_sequence_cycles(center_of(generate_ypq(4, 4), 14), 2, 4);
    CHECK(rs.beta2 == scaled(y2, 4));
  }
  CHECK_THROWS_AS(regular_sequence_cycles(ExponentMonoid({x1 + y1}), 2, 2), NotFound);
}

TEST_CASE("monomial quotient socle") {
  ExponentMonoid free2({x1, y1});
  SUBCASE("complete intersection is gorenstein") {
    SocleReport r = monomial_quotient_socle(free2, {x1 + x1, y1 + y1}, 10);
    CHECK(r.finite);
    CHECK(r.quotient_basis.size() == 4);
    REQUIRE(r.socle.size() == 1);
    CHECK(r.socle[0] == x1 + y1);
  }
  SUBCASE("square of the maximal ideal is not") {
    SocleReport r = monomial_quotient_socle(free2, {x1 + x1, x1 + y1, y1 + y1}, 10);
    CHECK(r.finite);
    CHECK(r.quotient_basis.size() == 3);
    CHECK(r.socle.size() == 2);
  }
  SUBCASE("infinite quotient") {
    CHECK_THROWS_AS(monomial_quotient_socle(free2, {x1 + x1}, 10), QuotientNotFiniteWithinCap);
  }
}

TEST_CASE("center quotient by alpha1, alpha2, beta1 keeps every power of x1 y1") {
  // beta1 needs x2 and alpha1 needs y2 once t >= 1, so (x1 y1)^k avoids the ideal
  for (auto [p, q] : {std::pair{1, 0}, {2, 1}, {4, 2}}) {
    TorusQuiver t = generate_ypq(p, q);
    ExponentMonoid Z = center_of(t, 2 * p + 6);
    auto [n, m] = effective_periods(t.n, t.m, t.shift);
    RegularSequence rs = regular_sequence_cycles(Z, n, m);
    REQUIRE(rs.t >= 1);
    for (int k = 1; k <= 12; ++k) {
      Monomial4 v = scaled(x1 + y1, k);
      if (!Z.contains(v)) continue;
      for (const auto& g : {rs.alpha1, rs.alpha2, rs.beta1}) CHECK_FALSE((nonnegative(v - g) && Z.contains(v - g)));
    }
    SocleReport r = try_gorenstein_socle(Z, rs, 24);
    CHECK_FALSE(r.finite);
    CHECK(r.unbounded.has_value());
  }
}

TEST_CASE("binomial relations") {
  ExponentMonoid M = conifold_monoid();
  auto rels = binomial_relations(M, 2);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].value == kSigma);
  CHECK(evaluate(M.generators(), rels[0].lhs) == evaluate(M.generators(), rels[0].rhs));

  CHECK(binomial_relations(ExponentMonoid({x2, y1, x1 + y2}), 4).empty());

  ExponentMonoid Y21 = ypq_center_formula(2, 1);
  auto r21 = binomial_relations(Y21, 3);
  CHECK_FALSE(r21.empty());
  for (const auto& r : r21) {
    CHECK(evaluate(Y21.generators(), r.lhs) == r.value);
    CHECK(evaluate(Y21.generators(), r.rhs) == r.value);
    CHECK(r.lhs != r.rhs);
  }
}

TEST_CASE("hilbert basis") {
  ExponentMonoid M({x1 + y1, x2 + y2, kSigma, x1 + y2, x2 + y1});
  auto hb = hilbert_basis_of(M);
  CHECK(std::set<Monomial4>(hb.begin(), hb.end()) == std::set<Monomial4>{x1 + y1, x2 + y2, x1 + y2, x2 + y1});
  CHECK(monoids_equal(M, conifold_monoid()));
}
