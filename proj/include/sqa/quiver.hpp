#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqa/monomial.hpp"

namespace sqa {

enum class ArrowClass { E, W, N, S, NE, SW, SE, NW };

struct Displacement {
  int dx;
  int dy;
};

Displacement displacement(ArrowClass c);
// Monomial label of a class: E->x1, W->x2, N->y1, S->y2, diagonals are products.
Monomial4 class_label(ArrowClass c);
std::string class_name(ArrowClass c);
std::optional<ArrowClass> parse_class(const std::string& s);
// Inverse of class_label; nullopt when no class carries the monomial.
std::optional<ArrowClass> class_for_label(const Monomial4& label);
std::optional<ArrowClass> class_for_displacement(int dx, int dy);

const std::vector<ArrowClass>& all_classes();

// Abstract quiver. Vertices are 1..num_vertices, arrow ids are 1..arrows.size()
// and arrows[k].id == k + 1.
struct Arrow {
  int id = 0;
  int tail = 0;
  int head = 0;
  std::string name;
};

struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;

  const Arrow& arrow(int id) const;
  int add_arrow(int tail, int head, std::string name = {});
  std::vector<int> out_arrows(int v) const;
  std::vector<int> in_arrows(int v) const;
  std::optional<int> find_arrow(const std::string& name) const;
  std::string arrow_name(int id) const;
};

// Throws InvalidQuiver on out-of-range endpoints or non-dense ids.
void check_quiver(const Quiver& q);

struct GridPos {
  int col = 0;
  int row = 0;
  bool operator==(const GridPos&) const = default;
};

struct TorusArrow {
  int id = 0;
  int tail = 0;
  int head = 0;
  ArrowClass cls = ArrowClass::E;
  bool operator==(const TorusArrow&) const = default;
};

// Vertex (i, m) is identified with (i + shift mod n, 0) and (n, j) with (0, j).
struct TorusQuiver {
  int n = 1;
  int m = 1;
  int shift = 0;
  std::vector<GridPos> pos;  // pos[v - 1]
  std::vector<TorusArrow> arrows;  // arrows[k].id == k + 1
  std::vector<std::string> names;  // optional, per arrow

  int num_vertices() const { return static_cast<int>(pos.size()); }
  GridPos normalize(int col, int row) const;
  // 0 when no vertex sits at the normalized position.
  int vertex_at(int col, int row) const;
  int add_arrow(int tail, int head, ArrowClass cls, std::string name = {});
  // Adds the arrow leaving the vertex at (col, row) in direction cls.
  int add_arrow_at(int col, int row, ArrowClass cls, std::string name = {});
  Quiver quiver() const;
  bool operator==(const TorusQuiver& o) const {
    return n == o.n && m == o.m && shift == o.shift && pos == o.pos && arrows == o.arrows;
  }
};

// Grid with vertex id = row * n + col + 1 and no arrows.
TorusQuiver empty_grid(int n, int m, int shift);

struct Violation {
  char condition;  // 's' structural, 'a'..'d' the four square conditions
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate_square(const TorusQuiver& q);

enum class Orientation { Clockwise, Counterclockwise };

struct UnitCycle {
  std::vector<int> arrows;  // composition order, back() traversed first
  Orientation orientation = Orientation::Counterclockwise;
  int anchor = 0;  // vertex at the lower-left corner of the unit square
};

std::vector<UnitCycle> unit_cycles(const TorusQuiver& q);

std::string export_dot(const TorusQuiver& q);
std::string export_json(const TorusQuiver& q);
TorusQuiver import_json(const std::string& text);

// Vertex bijection f (f[v - 1] = image of v) preserving arrow multiplicities.
std::optional<std::vector<int>> find_isomorphism(const Quiver& a, const Quiver& b);
bool isomorphic(const Quiver& a, const Quiver& b);

}  // namespace sqa
