#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sqa/linalg.hpp"
#include "sqa/quiver.hpp"
#include "sqa/rational.hpp"

namespace sqa {

// arrows[0] is the leftmost factor (traversed last); vertex paths have no arrows.
struct Path {
  int tail = 0;
  int head = 0;
  std::vector<int> arrows;

  auto operator<=>(const Path&) const = default;
  bool is_vertex() const { return arrows.empty(); }
};

Path vertex_path(int v);
Path arrow_path(const Quiver& q, int a);
Path path_from(const Quiver& q, const std::vector<int>& arrows);  // throws InvalidQuiver
// p * q, defined when q ends where p starts.
bool composable(const Path& p, const Path& q);
Path concat(const Path& p, const Path& q);

using Grading = std::vector<int>;  // weight of arrow id a at index a - 1

Grading unit_grading(const Quiver& q);
Grading square_grading(const TorusQuiver& q);
int path_weight(const Path& p, const Grading& g);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const Path& p, const Rational& c = 1) { add(p, c); }

  void add(const Path& p, const Rational& c);
  const std::map<Path, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Path& p) const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // path concatenation
  friend AlgebraElement operator*(const Rational& c, const AlgebraElement& e);
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

  std::string to_string(const Quiver& q) const;

 private:
  std::map<Path, Rational> terms_;
};

// Least rotation of a cyclic word.
std::vector<int> canonical_rotation(const std::vector<int>& cycle);

class Superpotential {
 public:
  // Adds coeff times the class of a cycle given in composition order.
  void add_cycle(const std::vector<int>& cycle, const Rational& coeff);
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Superpotential operator-() const;
  bool operator==(const Superpotential& o) const { return terms_ == o.terms_; }
  std::string to_string(const Quiver& q) const;

 private:
  std::map<std::vector<int>, Rational> terms_;
};

// Throws InvalidQuiver if a term is not a cycle of q.
void check_superpotential(const Quiver& q, const Superpotential& W);

std::string superpotential_json(const Superpotential& W);
Superpotential parse_superpotential_json(const std::string& text);

AlgebraElement cyclic_derivative(const Quiver& q, const Superpotential& W, int a);
Superpotential build_square_superpotential(const TorusQuiver& q);
std::vector<AlgebraElement> relation_generators(const Quiver& q, const Superpotential& W);

// Strip a leading h (resp. trailing g) from every term; other terms vanish.
AlgebraElement delta_left(const Quiver& q, int h, const AlgebraElement& e);
AlgebraElement delta_right(const Quiver& q, const AlgebraElement& e, int g);
// Both defining expressions are computed and compared.
AlgebraElement w_hg(const Quiver& q, const Superpotential& W, int h, int g);

struct Algebra {
  Quiver quiver;
  Superpotential W;
  Grading grading;
};

Algebra square_algebra(const TorusQuiver& q);

// Degreewise model of A = kQ / (dW). Slices are built lazily and cached, so an
// instance must not be shared between threads.
class GradedAlgebra {
 public:
  // Throws InhomogeneousRelations unless every relation is homogeneous.
  explicit GradedAlgebra(Algebra a);

  const Algebra& algebra() const { return alg_; }
  const Quiver& quiver() const { return alg_.quiver; }
  const std::vector<AlgebraElement>& relations() const { return relations_; }
  int weight(const Path& p) const { return path_weight(p, alg_.grading); }

  // All paths with the given tail and weight, any head.
  const std::vector<Path>& paths(int tail, int weight);
  int path_index(const Path& p);
  // Paths tail -> head of the given weight that survive as a basis of the quotient.
  std::vector<Path> basis(int tail, int head, int weight);
  int dim(int tail, int head, int weight);
  int path_count(int tail, int head, int weight);

  // Weight of a homogeneous element; throws InhomogeneousRelations otherwise.
  int homogeneous_weight(const AlgebraElement& e) const;
  // Normal form as coordinates over paths(tail, weight); all terms must share tail and weight.
  SparseVec normal_form(const AlgebraElement& e);
  bool is_zero(const AlgebraElement& e);
  bool equal_mod_relations(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement element(int tail, int weight, const SparseVec& coords);

 private:
  struct Slice {
    std::vector<Path> paths;
    std::map<Path, int> index;
    Echelon ideal;
    bool reduced = false;
  };
  Slice& slice(int tail, int weight);
  void build_paths(int tail, int weight);
  SparseVec coords(Slice& s, const AlgebraElement& e);

  Algebra alg_;
  std::vector<AlgebraElement> relations_;
  std::vector<int> relation_weight_;
  std::map<std::pair<int, int>, Slice> slices_;
};

std::vector<Path> graded_basis(GradedAlgebra& A, int i, int j, int d);
bool equal_mod_relations(GradedAlgebra& A, const AlgebraElement& p1, const AlgebraElement& p2);

}  // namespace sqa
