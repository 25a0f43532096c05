#include "sqa/ypq.hpp"

#include <cmath>
#include <deque>
#include <map>

#include "grid_geometry.hpp"
#include "sqa/errors.hpp"
#include "sqa/impression.hpp"

namespace sqa {

std::vector<Tile> parse_tiles(const std::string& s) {
  std::vector<Tile> out;
  for (char c : s) {
    switch (c) {
      case 'P': case 'p': out.push_back(Tile::Plain); break;
      case 'A': case 'a': out.push_back(Tile::DiagA); break;
      case 'B': case 'b': out.push_back(Tile::DiagB); break;
      case ',': case ' ': break;
      default: throw ParseError(std::string("unknown tile letter '") + c + "'");
    }
  }
  return out;
}

std::string tiles_string(const std::vector<Tile>& t) {
  std::string s;
  for (Tile x : t) s += x == Tile::Plain ? 'P' : x == Tile::DiagA ? 'A' : 'B';
  return s;
}

int double_configurations(const TileSequence& seq) {
  // Signed count: A is +1, B is -1, and every plain tile below flips the sign.
  int diag = 0, signed_count = 0, sign = 1;
  for (Tile x : seq.tiles) {
    if (x == Tile::Plain) {
      sign = -sign;
      continue;
    }
    ++diag;
    signed_count += x == Tile::DiagA ? sign : -sign;
  }
  return (diag - std::abs(signed_count)) / 2;
}

int q_of(const TileSequence& seq) {
  int plain = 0;
  for (Tile x : seq.tiles) plain += x == Tile::Plain;
  return static_cast<int>(seq.tiles.size()) - plain - 2 * double_configurations(seq);
}

std::optional<TorusQuiver> assemble_tiles(const TileSequence& seq) {
  const int p = static_cast<int>(seq.tiles.size());
  if (p == 0) return std::nullopt;
  TorusQuiver q = empty_grid(2, p, seq.shift);
  const int nv = q.num_vertices();

  std::vector<std::vector<grid::EdgeUse>> faces;
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < 2; ++c) {
      int diag = 0;
      if (seq.tiles[r] == Tile::DiagA) diag = c == 0 ? 2 : 1;
      if (seq.tiles[r] == Tile::DiagB) diag = c == 0 ? 1 : 2;
      for (auto& f : grid::square_faces(q, q.vertex_at(c, r), diag)) faces.push_back(std::move(f));
    }
  }

  std::map<int, std::vector<std::pair<int, int>>> incidence;  // edge -> (face, ccw sign)
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (const auto& e : faces[f]) incidence[e.edge].push_back({f, e.sign});
  for (const auto& [edge, list] : incidence) {
    if (list.size() != 2) return std::nullopt;
    if (list[0].first == list[1].first && list[0].second != list[1].second) return std::nullopt;
  }

  // color[f] = +1 counterclockwise, -1 clockwise; a shared edge forces c1 * s1 == c2 * s2.
  std::vector<int> color(faces.size(), 0);
  for (std::size_t start = 0; start < faces.size(); ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    std::deque<int> queue{static_cast<int>(start)};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (const auto& e : faces[f]) {
        for (const auto& [g, sg] : incidence[e.edge]) {
          if (g == f) continue;
          int want = color[f] * e.sign * sg;
          if (color[g] == 0) {
            color[g] = want;
            queue.push_back(g);
          } else if (color[g] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }

  // Diagonals of the first DIAG tile point up out of column 1 (A) or down out of it (B).
  for (int r = 0; r < p; ++r) {
    if (seq.tiles[r] == Tile::Plain) continue;
    const int c = seq.tiles[r] == Tile::DiagA ? 1 : 0;
    const int want = seq.tiles[r] == Tile::DiagA ? 1 : -1;
    const int edge = grid::edge_index(grid::D1, q.vertex_at(c, r), nv);
    const auto& [f, sign] = incidence[edge].front();
    if (color[f] * sign != want)
      for (auto& x : color) x = -x;
    break;
  }

  std::map<int, int> direction;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const auto& e : faces[f]) direction[e.edge] = color[f] * e.sign;

  for (const auto& [edge, s] : direction) {
    const int kind = edge / nv;
    const int anchor = edge % nv + 1;
    const GridPos a = q.pos[anchor - 1];
    switch (kind) {
      case grid::H:
        if (s > 0) q.add_arrow_at(a.col, a.row, ArrowClass::E);
        else q.add_arrow_at(a.col + 1, a.row, ArrowClass::W);
        break;
      case grid::V:
        if (s > 0) q.add_arrow_at(a.col, a.row, ArrowClass::N);
        else q.add_arrow_at(a.col, a.row + 1, ArrowClass::S);
        break;
      case grid::D1:
        if (s > 0) q.add_arrow_at(a.col, a.row, ArrowClass::NE);
        else q.add_arrow_at(a.col + 1, a.row + 1, ArrowClass::SW);
        break;
      case grid::D2:
        if (s > 0) q.add_arrow_at(a.col + 1, a.row, ArrowClass::NW);
        else q.add_arrow_at(a.col, a.row + 1, ArrowClass::SE);
        break;
    }
  }
  if (!validate_square(q).ok) return std::nullopt;
  return q;
}

TileSequence canonical_tiles(int p, int q) {
  if (p < 1 || q < 0 || q > p) throw InvalidPQ("need p >= 1 and 0 <= q <= p");
  TileSequence seq;
  for (int k = 0; k < p - q; ++k) seq.tiles.push_back(Tile::Plain);
  for (int k = 0; k < q; ++k) seq.tiles.push_back(Tile::DiagA);
  for (int shift : {0, 1}) {
    seq.shift = shift;
    if (q_of(seq) == q && assemble_tiles(seq)) return seq;
  }
  throw TileMismatch("no shift realises the canonical tiles for Y^{" + std::to_string(p) + "," +
                     std::to_string(q) + "}");
}

TorusQuiver generate_ypq(int p, int q, const std::optional<TileSequence>& tiles) {
  if (p < 1 || q < 0 || q > p) throw InvalidPQ("need p >= 1 and 0 <= q <= p");
  TileSequence seq = tiles ? *tiles : canonical_tiles(p, q);
  if (static_cast<int>(seq.tiles.size()) != p)
    throw TileMismatch("expected " + std::to_string(p) + " tiles, got " + std::to_string(seq.tiles.size()));
  if (q_of(seq) != q)
    throw TileMismatch("tiles " + tiles_string(seq.tiles) + " give q = " + std::to_string(q_of(seq)));
  auto out = assemble_tiles(seq);
  if (!out) throw TileMismatch("tiles " + tiles_string(seq.tiles) + " admit no consistent orientation");
  ValidationReport rep = validate_square(*out);
  if (!rep.ok) throw NotSquare(rep.violations.front().message);
  return *out;
}

ExponentMonoid ypq_center_formula(int p, int q) {
  if (p < 1 || q < 0 || q > p) throw InvalidPQ("need p >= 1 and 0 <= q <= p");
  std::vector<Monomial4> g{{2, 0, 1, 1}, {1, 1, 1, 1}, {0, 2, 1, 1}};
  for (int k = 0; k <= p + q; ++k) g.push_back({k, p + q - k, p, 0});
  for (int k = 0; k <= p - q; ++k) g.push_back({k, p - q - k, 0, p});
  return ExponentMonoid(g);
}

CenterComparison compare_center_with_formula(const TorusQuiver& q, int p, int qq, int D) {
  CenterComparison cmp;
  Impression tau = build_tau(q);
  cmp.computed = center_generators(q.quiver(), tau, D);
  ExponentMonoid formula = ypq_center_formula(p, qq);
  ExponentMonoid computed(cmp.computed);
  cmp.formula = formula.generators();
  for (const auto& g : cmp.formula)
    if (degree(g) <= D && !computed.contains(g)) cmp.missing_from_computed.push_back(g);
  for (const auto& g : cmp.computed)
    if (!formula.contains(g)) cmp.missing_from_formula.push_back(g);
  cmp.equal = cmp.missing_from_computed.empty() && cmp.missing_from_formula.empty();
  return cmp;
}

bool center_matches_formula(int p, int q, int D) {
  return compare_center_with_formula(generate_ypq(p, q), p, q, D).equal;
}

RChargeTable rcharge_table(int p, int q) {
  if (q <= 0 || q > p) throw InvalidPQ("R-charges need 0 < q <= p");
  const double P = p, Q = q;
  const double S = std::sqrt(4 * P * P - 3 * Q * Q);
  RChargeTable t;
  t.p = p;
  t.q = q;
  t.x1y1 = (3 * Q - 2 * P + S) / (3 * Q);
  t.x1 = 2 * P * (2 * P - S) / (3 * Q * Q);
  t.y2 = (-4 * P * P + 3 * Q * Q + 2 * P * Q + (2 * P - Q) * S) / (3 * Q * Q);
  t.y1 = (-4 * P * P + 3 * Q * Q - 2 * P * Q + (2 * P + Q) * S) / (3 * Q * Q);
  t.x1y2 = (3 * Q + 2 * P - S) / (3 * Q);
  return t;
}

TorusWeights torus_action_weights(int p, int q) {
  if (p < 1 || q < 0 || q > p) throw InvalidPQ("need p >= 1 and 0 <= q <= p");
  TorusWeights w;
  w.lambda = {-p, -p, p + q, p - q};
  w.omega = {-1, -1, 2, 0};
  w.omega_order = p - q;
  if (w.omega_order > 0)
    for (auto& x : w.omega) x = ((x % w.omega_order) + w.omega_order) % w.omega_order;
  return w;
}

bool invariant_under(const TorusWeights& w, const Monomial4& m) {
  int l = 0, o = 0;
  for (int k = 0; k < 4; ++k) {
    l += w.lambda[k] * m[k];
    o += w.omega[k] * m[k];
  }
  if (l != 0) return false;
  return w.omega_order == 0 || o % w.omega_order == 0;
}

}  // namespace sqa
