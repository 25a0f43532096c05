#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sqa/monomial.hpp"

namespace sqa {

// Submonoid of N^4 generated by nonzero exponent vectors.
class ExponentMonoid {
 public:
  ExponentMonoid() = default;
  explicit ExponentMonoid(std::vector<Monomial4> generators);

  const std::vector<Monomial4>& generators() const { return gens_; }
  // Hermite normal form rows of the generated lattice.
  const std::vector<Monomial4>& lattice_basis() const { return hnf_; }
  bool contains(const Monomial4& v) const;
  bool in_lattice(const Monomial4& v) const;

 private:
  std::vector<Monomial4> gens_;
  std::vector<Monomial4> hnf_;
  mutable std::set<Monomial4> yes_, no_;
};

int monoid_rank(const ExponentMonoid& M);
bool monoids_equal(const ExponentMonoid& a, const ExponentMonoid& b);
std::vector<Monomial4> hilbert_basis_of(const ExponentMonoid& M);  // irreducible generators

// Exact membership in the real cone spanned by the generators.
class ConeTest {
 public:
  explicit ConeTest(const std::vector<Monomial4>& gens);
  bool contains(const Monomial4& v) const;
  int rank() const { return rank_; }
  const std::vector<std::array<long long, 4>>& facets() const { return facets_; }

 private:
  int rank_ = 0;
  std::vector<std::array<long long, 4>> complement_;  // integer basis of span(gens)^perp
  std::vector<std::array<long long, 4>> facets_;      // inward normals inside span(gens)
};

struct SaturationReport {
  bool saturated = true;
  int points_checked = 0;
  std::optional<Monomial4> witness;  // in lattice and cone but not in the monoid
};

SaturationReport saturation_check(const ExponentMonoid& M, int bound);

struct RegularSequence {
  Monomial4 alpha1{}, alpha2{}, beta1{}, beta2{};
  Monomial4 sigma = kSigma;
  int n = 0, m = 0;  // effective horizontal and vertical periods
  int t = 0, s = 0;
  bool swapped = false;  // true when n > m and the roles of x and y were exchanged
};

// Effective periods of the torus quiver: n columns, and m * n / gcd(n, shift)
// rows before a vertical cycle closes.
std::pair<int, int> effective_periods(int n, int m, int shift);

RegularSequence regular_sequence_cycles(const ExponentMonoid& Z, int n, int m);

struct SocleReport {
  bool finite = false;
  int cap = 0;
  std::vector<Monomial4> ideal;           // alpha1, alpha2, beta1
  std::vector<Monomial4> quotient_basis;  // monoid elements outside the ideal
  std::vector<Monomial4> socle;
  Monomial4 expected{};                   // sigma^(min(n, m) - 1)
  std::optional<Monomial4> unbounded;     // a surviving element of top degree when not finite
};

// Monomial quotient of the monoid algebra by the ideal generators; throws
// QuotientNotFiniteWithinCap when surviving elements reach the degree cap.
SocleReport monomial_quotient_socle(const ExponentMonoid& Z, const std::vector<Monomial4>& ideal, int cap);
SocleReport gorenstein_socle(const ExponentMonoid& Z, const RegularSequence& rs, int cap);
// Same computation without throwing; finite == false signals an infinite quotient.
SocleReport try_gorenstein_socle(const ExponentMonoid& Z, const RegularSequence& rs, int cap);

struct BinomialRelation {
  std::vector<int> lhs;  // multiplicity per generator
  std::vector<int> rhs;
  Monomial4 value{};
};

std::vector<BinomialRelation> binomial_relations(const ExponentMonoid& M, int degree_bound);

}  // namespace sqa
