#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sqa/monomial.hpp"
#include "sqa/path_algebra.hpp"
#include "sqa/quiver.hpp"

namespace sqa {

struct Impression {
  std::vector<Monomial4> label;  // label[a - 1]
  const Monomial4& operator()(int arrow) const { return label.at(arrow - 1); }
};

Impression build_tau(const TorusQuiver& q);
Monomial4 tau_path(const Path& p, const Impression& tau);
bool check_well_defined(const Quiver& q, const Superpotential& W, const Impression& tau);

struct InjectivityReport {
  bool ok = true;
  int tail = 0, head = 0, weight = 0;
  int dim = 0, distinct = 0;
  std::vector<Path> colliding;  // paths sharing one monomial but distinct in the quotient
  int slices_checked = 0;
};

InjectivityReport tau_injective_upto(GradedAlgebra& A, const Impression& tau, int D);

bool corner_commutative_check(GradedAlgebra& A, int i, int D);

// Monomials of paths tail -> head of total degree <= D, for every head.
// Square grading is assumed, so the weight of a path is the degree of its monomial.
std::vector<std::set<Monomial4>> reachable_monomials(const Quiver& q, const Impression& tau, int tail, int D);

struct HomogeneityReport {
  bool ok = true;
  int max_degree = 0;
  Monomial4 witness{};
  int present_at = 0;  // vertex whose corner contains the witness
  int missing_at = 0;  // vertex whose corner lacks it
};

// Corner sets are compared against vertex 1; the witness is the least monomial
// (degree, then exponents) of the first vertex whose set differs.
HomogeneityReport homogeneity_check(const Quiver& q, const Impression& tau, int D);

// Minimal elements of a truncated monoid: not a sum of two nonunit members.
std::vector<Monomial4> minimal_generators(const std::set<Monomial4>& elems);

// Intersection of the corner sets up to degree D; throws NotHomogeneous.
std::set<Monomial4> center_monomials(const Quiver& q, const Impression& tau, int D);
std::vector<Monomial4> center_generators(const Quiver& q, const Impression& tau, int D);

// Per vertex i, minimal generators of tau(e_i A e_base) over the center monoid.
std::vector<std::vector<Monomial4>> vertex_module_generators(const Quiver& q, const Impression& tau, int base, int D);

}  // namespace sqa
