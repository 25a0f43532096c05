#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqa/path_algebra.hpp"
#include "sqa/quiver.hpp"

namespace sqa {

// Row r is the source component, column c the target component; a source
// element m in component r contributes m * M[r][c] to component c.
using Matrix = std::vector<std::vector<AlgebraElement>>;

Matrix matrix_product(const Matrix& left, const Matrix& right);
std::string matrix_string(const Quiver& q, const Matrix& M);

// P_0 <- P_1 <- ... <- P_N with terms[k] the vertices of the summands Ae_v of P_k.
// maps[k - 1] : P_k -> P_{k - 1}. P_0 is augmented onto its vertex simples.
struct ProjectiveComplex {
  std::string name;
  std::vector<std::vector<int>> terms;
  std::vector<Matrix> maps;
  bool terminal = false;  // 0 -> P_N, so homology at P_N is ker of its map
  int length() const { return static_cast<int>(terms.size()) - 1; }
};

struct ComplexCheck {
  bool ok = true;
  std::string detail;  // first offending entry
  explicit operator bool() const { return ok; }
};

// Shape and composability of every entry.
ComplexCheck check_shape(const ProjectiveComplex& C, const Quiver& q);
// Every composite of consecutive maps reduces to zero modulo the relations.
ComplexCheck verify_complex(GradedAlgebra& A, const ProjectiveComplex& C);

// Degree shifts of the generators of each summand, forced by entry weights.
// Throws NotHomogeneous when two entries disagree.
std::vector<std::vector<int>> generator_shifts(GradedAlgebra& A, const ProjectiveComplex& C);

struct JunctionHomology {
  int position = 0;        // homology at P_position
  std::string label;
  std::vector<int> dims;   // dims[t], total degree t = 0..D
  bool exact() const;
};

struct ExactnessReport {
  int max_degree = 0;
  std::vector<JunctionHomology> junctions;
  bool exact() const;
  const JunctionHomology* at(int position) const;
};

// Homology per total degree at P_0 (against the vertex simples), at every interior
// term, and at P_N when the complex is terminal.
ExactnessReport exactness_report(GradedAlgebra& A, const ProjectiveComplex& C, int D);

struct BDComplex {
  int vertex = 0;
  std::vector<int> g;  // arrows out of the vertex
  std::vector<int> h;  // arrows into the vertex
  std::vector<int> T3, T2, T1, T0;
  Matrix delta2;  // 1 x n, [h_k]
  Matrix delta1;  // n x m, [W_{h_k, g_j}]
  Matrix delta0;  // m x 1, [g_j]
  ProjectiveComplex as_complex() const;
};

// Star orderings by explicit arrow lists, or by arrow id when empty.
BDComplex build_bd_complex(const Algebra& A, int i, std::vector<int> g_order = {}, std::vector<int> h_order = {});
// Both stars ordered clockwise by midpoint angle around the vertex, then the out-arrows
// rotated so that W_{h_1, g_1} and W_{h_2, g_1} are nonzero.
BDComplex build_bd_complex(const TorusQuiver& q, int i);
std::pair<std::vector<int>, std::vector<int>> clockwise_star(const TorusQuiver& q, int i);

// Raw identities sum_k h_k W_{h_k, g_j} = d_{g_j} W and sum_j W_{h_k, g_j} g_j = d_{h_k} W,
// then vanishing of both composites modulo the relations.
ComplexCheck verify_complex(GradedAlgebra& A, const BDComplex& C);
ExactnessReport exactness_report(GradedAlgebra& A, const BDComplex& C, int D);

// True when delta1 is nonzero exactly on the diagonal and the cyclic subdiagonal.
bool bidiagonal_with_corner(const BDComplex& C);

struct RightMultKernel {
  int arrow = 0;
  std::vector<int> dims;                        // kernel dimension in source weight w
  std::vector<int> predicted;                   // dim of the sum of A W_{h,g} over h with W_{h,g} g = W_h
  std::vector<int> with_predicted;              // arrows h contributing to the prediction
  std::vector<AlgebraElement> witnesses;        // one per weight with a kernel
  bool zero() const;
};

// Kernel of m -> m g from Ae_{h(g)} to Ae_{t(g)} in source weights 0..D.
RightMultKernel right_mult_kernel(GradedAlgebra& A, int g, int D);

struct FixtureResolution {
  std::string name;
  Algebra algebra;
  ProjectiveComplex complex;
  int period = 0;  // 0 for finite resolutions
};

std::vector<FixtureResolution> fixture_resolutions();

}  // namespace sqa
