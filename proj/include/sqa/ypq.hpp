#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqa/quiver.hpp"
#include "sqa/toric.hpp"

namespace sqa {

enum class Tile { Plain, DiagA, DiagB };

struct TileSequence {
  std::vector<Tile> tiles;  // tiles[r] occupies rows r..r+1
  int shift = 0;
};

// Letters P, A, B; commas and spaces ignored.
std::vector<Tile> parse_tiles(const std::string& s);
std::string tiles_string(const std::vector<Tile>& t);

// Diamonds pairing a DIAG_A tile with a DIAG_B tile once the column offsets are
// undone: each plain tile moves the pattern one column, which swaps A and B.
// Pairs need not be adjacent, since mutations at degree 2 vertices slide tiles.
int double_configurations(const TileSequence& seq);
int q_of(const TileSequence& seq);

// Builds the quiver of a tile sequence; nullopt when no orientation makes every
// unit cycle oriented. DIAG_A diagonals point up and DIAG_B diagonals down;
// without diagonals the unit cycle at the bottom-left of vertex 1 is counterclockwise.
std::optional<TorusQuiver> assemble_tiles(const TileSequence& seq);

TileSequence canonical_tiles(int p, int q);
TorusQuiver generate_ypq(int p, int q, const std::optional<TileSequence>& tiles = std::nullopt);

ExponentMonoid ypq_center_formula(int p, int q);

struct CenterComparison {
  bool equal = false;
  std::vector<Monomial4> computed;
  std::vector<Monomial4> formula;
  std::vector<Monomial4> missing_from_computed;  // formula generators absent up to D
  std::vector<Monomial4> missing_from_formula;   // computed generators outside the formula monoid
};

CenterComparison compare_center_with_formula(const TorusQuiver& q, int p, int qq, int D);
bool center_matches_formula(int p, int q, int D);

struct RChargeTable {
  int p = 0, q = 0;
  double x1y1 = 0;  // also x2y1
  double x1 = 0;    // also x2
  double y2 = 0;
  double y1 = 0;
  double x1y2 = 0;  // also x2y2
};

RChargeTable rcharge_table(int p, int q);

struct TorusWeights {
  std::array<int, 4> lambda;
  std::array<int, 4> omega;
  int omega_order;  // p - q; 0 means the finite factor is absent
};

TorusWeights torus_action_weights(int p, int q);
bool invariant_under(const TorusWeights& w, const Monomial4& m);

}  // namespace sqa
