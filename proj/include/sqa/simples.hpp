#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "sqa/impression.hpp"
#include "sqa/path_algebra.hpp"
#include "sqa/quiver.hpp"
#include "sqa/rational.hpp"

namespace sqa {

using ExactPoint = std::array<Rational, 4>;
using ComplexPoint = std::array<std::complex<double>, 4>;

enum class RepMode { Exact, Complex };

// One-dimensional at every vertex; arrow a acts by value[a - 1] from its tail to its head.
struct Representation {
  RepMode mode = RepMode::Exact;
  Quiver quiver;
  std::vector<int> dims;
  std::vector<Rational> exact;
  std::vector<std::complex<double>> value;
  bool in_U = false;  // x1 x2 y1 y2 != 0

  bool vanishes(int arrow) const;
  std::vector<int> support() const;  // arrows acting by a nonzero scalar
};

// Arrow a acts by tau(a) evaluated at the point. Throws RelationViolation if a relation
// fails (exactly, or beyond 1e-12 relative in complex mode).
Representation large_simple(const Algebra& A, const Impression& tau, const ExactPoint& point);
Representation large_simple(const Algebra& A, const Impression& tau, const ComplexPoint& point);
Representation large_simple(const TorusQuiver& q, const ExactPoint& point);
Representation large_simple(const TorusQuiver& q, const ComplexPoint& point);

// Span of the vertex idempotents and arrow matrices closed under products equals the full
// matrix algebra. Throws DimensionCap above total dimension 64.
bool is_irreducible(const Representation& rep);

double moment_map(int p, int q, const ComplexPoint& point);

struct ModuliSample {
  ComplexPoint point{};
  double mu = 0;
  std::vector<int> support;
  bool irreducible = false;
};

struct SupportGroup {
  std::vector<int> support;
  std::vector<ModuliSample> samples;
};

struct ModuliScan {
  int p = 0, q = 0;
  double r = 0;
  double level = 0;  // sign(r) r^2 / 2
  std::vector<SupportGroup> groups;  // ordered by support
};

// r > 0 samples the slice x1 = x2 = 0, r < 0 the slice y1 = y2 = 0, r = 0 points with all
// coordinates nonzero; every sample lies on the level sign(r) r^2 / 2.
// Throws EmptyLevelSet when the slice cannot reach the level.
ModuliScan moduli_scan(const TorusQuiver& quiver, int p, int q, double r, int samples, std::uint64_t seed);
ModuliScan moduli_scan(int p, int q, double r, int samples, std::uint64_t seed);

// Each coordinate is 0 with probability zero_probability, else uniform in [-5, 5] \ {0}.
ExactPoint random_lattice_point(std::mt19937_64& rng, double zero_probability);

}  // namespace sqa
