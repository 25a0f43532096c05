#include "sqa/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "grid_geometry.hpp"
#include "sqa/errors.hpp"

namespace sqa {

namespace {

struct ClassInfo {
  ArrowClass cls;
  const char* name;
  Displacement d;
  Monomial4 label;
};

const ClassInfo kClasses[] = {
    {ArrowClass::E, "E", {1, 0}, {1, 0, 0, 0}},
    {ArrowClass::W, "W", {-1, 0}, {0, 1, 0, 0}},
    {ArrowClass::N, "N", {0, 1}, {0, 0, 1, 0}},
    {ArrowClass::S, "S", {0, -1}, {0, 0, 0, 1}},
    {ArrowClass::NE, "NE", {1, 1}, {1, 0, 1, 0}},
    {ArrowClass::SW, "SW", {-1, -1}, {0, 1, 0, 1}},
    {ArrowClass::SE, "SE", {1, -1}, {1, 0, 0, 1}},
    {ArrowClass::NW, "NW", {-1, 1}, {0, 1, 1, 0}},
};

const ClassInfo& info(ArrowClass c) { return kClasses[static_cast<int>(c)]; }

}  // namespace

std::string monomial_string(const Monomial4& a) {
  static const char* vars[] = {"x1", "x2", "y1", "y2"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (a[k] == 0) continue;
    out += vars[k];
    if (a[k] != 1) out += "^" + std::to_string(a[k]);
  }
  return out.empty() ? "1" : out;
}

Displacement displacement(ArrowClass c) { return info(c).d; }
Monomial4 class_label(ArrowClass c) { return info(c).label; }
std::string class_name(ArrowClass c) { return info(c).name; }

std::optional<ArrowClass> parse_class(const std::string& s) {
  for (const auto& ci : kClasses)
    if (s == ci.name) return ci.cls;
  return std::nullopt;
}

std::optional<ArrowClass> class_for_label(const Monomial4& label) {
  for (const auto& ci : kClasses)
    if (ci.label == label) return ci.cls;
  return std::nullopt;
}

std::optional<ArrowClass> class_for_displacement(int dx, int dy) {
  for (const auto& ci : kClasses)
    if (ci.d.dx == dx && ci.d.dy == dy) return ci.cls;
  return std::nullopt;
}

const std::vector<ArrowClass>& all_classes() {
  static const std::vector<ArrowClass> v = {ArrowClass::E,  ArrowClass::W,  ArrowClass::N,
                                            ArrowClass::S,  ArrowClass::NE, ArrowClass::SW,
                                            ArrowClass::SE, ArrowClass::NW};
  return v;
}

// ---------------------------------------------------------------- Quiver

const Arrow& Quiver::arrow(int id) const {
  if (id < 1 || id > static_cast<int>(arrows.size()))
    throw UnknownArrow("arrow id " + std::to_string(id));
  return arrows[id - 1];
}

int Quiver::add_arrow(int tail, int head, std::string name) {
  int id = static_cast<int>(arrows.size()) + 1;
  arrows.push_back({id, tail, head, std::move(name)});
  return id;
}

std::vector<int> Quiver::out_arrows(int v) const {
  std::vector<int> r;
  for (const auto& a : arrows)
    if (a.tail == v) r.push_back(a.id);
  return r;
}

std::vector<int> Quiver::in_arrows(int v) const {
  std::vector<int> r;
  for (const auto& a : arrows)
    if (a.head == v) r.push_back(a.id);
  return r;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return a.id;
  return std::nullopt;
}

std::string Quiver::arrow_name(int id) const {
  const Arrow& a = arrow(id);
  return a.name.empty() ? "a" + std::to_string(id) : a.name;
}

void check_quiver(const Quiver& q) {
  if (q.num_vertices < 0) throw InvalidQuiver("negative vertex count");
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    if (a.id != static_cast<int>(k) + 1) throw InvalidQuiver("arrow ids must be dense 1..|Q1|");
    if (a.tail < 1 || a.tail > q.num_vertices || a.head < 1 || a.head > q.num_vertices)
      throw InvalidQuiver("arrow " + std::to_string(a.id) + " has an endpoint out of range");
  }
}

// ---------------------------------------------------------------- TorusQuiver

GridPos TorusQuiver::normalize(int col, int row) const {
  while (row >= m) {
    row -= m;
    col += shift;
  }
  while (row < 0) {
    row += m;
    col -= shift;
  }
  col %= n;
  if (col < 0) col += n;
  return {col, row};
}

int TorusQuiver::vertex_at(int col, int row) const {
  GridPos p = normalize(col, row);
  for (std::size_t v = 0; v < pos.size(); ++v)
    if (pos[v] == p) return static_cast<int>(v) + 1;
  return 0;
}

int TorusQuiver::add_arrow(int tail, int head, ArrowClass cls, std::string name) {
  int id = static_cast<int>(arrows.size()) + 1;
  arrows.push_back({id, tail, head, cls});
  if (!name.empty() || !names.empty()) {
    names.resize(arrows.size());
    names.back() = std::move(name);
  }
  return id;
}

int TorusQuiver::add_arrow_at(int col, int row, ArrowClass cls, std::string name) {
  Displacement d = displacement(cls);
  int tail = vertex_at(col, row);
  int head = vertex_at(col + d.dx, row + d.dy);
  if (tail == 0 || head == 0) throw InvalidQuiver("no vertex at grid position");
  return add_arrow(tail, head, cls, std::move(name));
}

Quiver TorusQuiver::quiver() const {
  Quiver q;
  q.num_vertices = num_vertices();
  for (const auto& a : arrows) {
    std::string nm = a.id <= static_cast<int>(names.size()) ? names[a.id - 1] : std::string();
    q.arrows.push_back({a.id, a.tail, a.head, nm});
  }
  return q;
}

TorusQuiver empty_grid(int n, int m, int shift) {
  TorusQuiver q;
  q.n = n;
  q.m = m;
  q.shift = shift;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) q.pos.push_back({c, r});
  return q;
}

// ---------------------------------------------------------------- geometry

namespace grid {

EdgeUse arrow_edge(const TorusQuiver& q, const TorusArrow& a) {
  const int nv = q.num_vertices();
  const GridPos t = q.pos[a.tail - 1];
  const GridPos h = q.pos[a.head - 1];
  switch (a.cls) {
    case ArrowClass::E: return {edge_index(H, a.tail, nv), 1};
    case ArrowClass::W: return {edge_index(H, a.head, nv), -1};
    case ArrowClass::N: return {edge_index(V, a.tail, nv), 1};
    case ArrowClass::S: return {edge_index(V, a.head, nv), -1};
    case ArrowClass::NE: return {edge_index(D1, a.tail, nv), 1};
    case ArrowClass::SW: return {edge_index(D1, a.head, nv), -1};
    case ArrowClass::NW: return {edge_index(D2, q.vertex_at(t.col - 1, t.row), nv), 1};
    case ArrowClass::SE: return {edge_index(D2, q.vertex_at(h.col - 1, h.row), nv), -1};
  }
  return {0, 0};
}

std::vector<std::vector<EdgeUse>> square_faces(const TorusQuiver& q, int anchor, int diagonal) {
  const int nv = q.num_vertices();
  const GridPos p = q.pos[anchor - 1];
  EdgeUse bottom{edge_index(H, anchor, nv), 1};
  EdgeUse right{edge_index(V, q.vertex_at(p.col + 1, p.row), nv), 1};
  EdgeUse top{edge_index(H, q.vertex_at(p.col, p.row + 1), nv), -1};
  EdgeUse left{edge_index(V, anchor, nv), -1};
  int d1 = edge_index(D1, anchor, nv);
  int d2 = edge_index(D2, anchor, nv);
  if (diagonal == 1) return {{bottom, right, {d1, -1}}, {{d1, 1}, top, left}};
  if (diagonal == 2) return {{bottom, {d2, 1}, left}, {right, top, {d2, -1}}};
  return {{bottom, right, top, left}};
}

}  // namespace grid

namespace {

struct Occupancy {
  std::vector<std::vector<int>> arrows_on_edge;  // arrow ids per edge
  std::vector<int> sign_of_arrow;                // forward sign per arrow id - 1
};

Occupancy occupancy(const TorusQuiver& q) {
  Occupancy occ;
  occ.arrows_on_edge.assign(4 * q.num_vertices(), {});
  occ.sign_of_arrow.assign(q.arrows.size(), 0);
  for (const auto& a : q.arrows) {
    grid::EdgeUse e = grid::arrow_edge(q, a);
    occ.arrows_on_edge[e.edge].push_back(a.id);
    occ.sign_of_arrow[a.id - 1] = e.sign;
  }
  return occ;
}

// 0 none, 1 D1, 2 D2, 3 both.
int diagonal_of(const TorusQuiver& q, const Occupancy& occ, int anchor) {
  const int nv = q.num_vertices();
  int d = 0;
  if (!occ.arrows_on_edge[grid::edge_index(grid::D1, anchor, nv)].empty()) d |= 1;
  if (!occ.arrows_on_edge[grid::edge_index(grid::D2, anchor, nv)].empty()) d |= 2;
  return d;
}

std::string pos_string(const GridPos& p) {
  return "(" + std::to_string(p.col) + "," + std::to_string(p.row) + ")";
}

void structural_checks(const TorusQuiver& q, ValidationReport& rep) {
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back({'s', msg});
  };
  if (q.n < 1 || q.m < 1) return fail("grid dimensions must be positive");
  if (q.shift < 0 || q.shift >= q.n) fail("shift must lie in [0, n)");
  if (q.num_vertices() != q.n * q.m) fail("vertex count must equal n*m");
  std::set<std::pair<int, int>> seen;
  for (int v = 1; v <= q.num_vertices(); ++v) {
    GridPos p = q.pos[v - 1];
    if (p.col < 0 || p.col >= q.n || p.row < 0 || p.row >= q.m)
      fail("vertex " + std::to_string(v) + " lies outside the fundamental domain");
    else if (!seen.insert({p.col, p.row}).second)
      fail("two vertices share position " + pos_string(p));
  }
  if (!rep.ok) return;
  std::set<std::tuple<int, int, int>> pairs;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const TorusArrow& a = q.arrows[k];
    std::string tag = "arrow " + std::to_string(a.id);
    if (a.id != static_cast<int>(k) + 1) {
      fail("arrow ids must be dense 1..|Q1|");
      continue;
    }
    if (a.tail < 1 || a.tail > q.num_vertices() || a.head < 1 || a.head > q.num_vertices()) {
      fail(tag + " has an endpoint out of range");
      continue;
    }
    Displacement d = displacement(a.cls);
    GridPos t = q.pos[a.tail - 1];
    if (q.vertex_at(t.col + d.dx, t.row + d.dy) != a.head)
      fail(tag + " displacement does not match class " + class_name(a.cls));
    if (!pairs.insert({a.tail, a.head, static_cast<int>(a.cls)}).second)
      fail(tag + " duplicates an arrow with the same endpoints and class");
  }
}

}  // namespace

ValidationReport validate_square(const TorusQuiver& q) {
  ValidationReport rep;
  structural_checks(q, rep);
  if (!rep.ok) return rep;
  Occupancy occ = occupancy(q);
  const int nv = q.num_vertices();
  auto fail = [&](char c, const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back({c, msg});
  };
  for (int v = 1; v <= nv; ++v) {
    std::string where = pos_string(q.pos[v - 1]);
    for (int kind : {grid::H, grid::V}) {
      std::size_t cnt = occ.arrows_on_edge[grid::edge_index(kind, v, nv)].size();
      std::string edge = std::string(kind == grid::H ? "horizontal" : "vertical") + " edge at " + where;
      if (cnt == 0) fail('a', edge + " is missing");
      if (cnt > 1) fail('a', edge + " carries " + std::to_string(cnt) + " arrows");
    }
    if (diagonal_of(q, occ, v) == 3) fail('b', "unit square at " + where + " has both diagonals");
    for (int kind : {grid::D1, grid::D2}) {
      std::size_t cnt = occ.arrows_on_edge[grid::edge_index(kind, v, nv)].size();
      if (cnt > 1)
        fail('b', "diagonal of unit square at " + where + " carries " + std::to_string(cnt) + " arrows");
    }
  }
  for (int v = 1; v <= nv; ++v) {
    int diag = diagonal_of(q, occ, v);
    if (diag == 3) continue;
    for (const auto& face : grid::square_faces(q, v, diag)) {
      bool complete = true;
      int along = 0;
      for (const auto& e : face) {
        if (occ.arrows_on_edge[e.edge].size() != 1) {
          complete = false;
          break;
        }
        int a = occ.arrows_on_edge[e.edge][0];
        if (occ.sign_of_arrow[a - 1] == e.sign) ++along;
      }
      if (!complete) continue;
      if (along != 0 && along != static_cast<int>(face.size())) {
        if (face.size() == 4)
          fail('c', "unit square at " + pos_string(q.pos[v - 1]) + " is not an oriented 4-cycle");
        else
          fail('d', "triangle in unit square at " + pos_string(q.pos[v - 1]) + " is not an oriented 3-cycle");
      }
    }
  }
  return rep;
}

std::vector<UnitCycle> unit_cycles(const TorusQuiver& q) {
  ValidationReport rep = validate_square(q);
  if (!rep.ok) throw NotSquare(rep.violations.front().message);
  Occupancy occ = occupancy(q);
  std::vector<UnitCycle> out;
  for (int v = 1; v <= q.num_vertices(); ++v) {
    for (const auto& face : grid::square_faces(q, v, diagonal_of(q, occ, v))) {
      std::vector<int> ccw;
      bool along = false;
      for (const auto& e : face) {
        int a = occ.arrows_on_edge[e.edge][0];
        ccw.push_back(a);
        along = occ.sign_of_arrow[a - 1] == e.sign;
      }
      UnitCycle c;
      c.anchor = v;
      if (along) {
        c.orientation = Orientation::Counterclockwise;
        c.arrows.assign(ccw.rbegin(), ccw.rend());
      } else {
        c.orientation = Orientation::Clockwise;
        c.arrows = ccw;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------- I/O

std::string export_dot(const TorusQuiver& q) {
  std::ostringstream os;
  os << "digraph Q {\n";
  for (int v = 1; v <= q.num_vertices(); ++v)
    os << "  " << v << " [pos=\"" << q.pos[v - 1].col << "," << q.pos[v - 1].row << "!\"];\n";
  Quiver plain = q.quiver();
  for (const auto& a : q.arrows)
    os << "  " << a.tail << " -> " << a.head << " [label=\"" << plain.arrow_name(a.id) << ":"
       << class_name(a.cls) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const TorusQuiver& q) {
  nlohmann::ordered_json j;
  j["n"] = q.n;
  j["m"] = q.m;
  j["shift"] = q.shift;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 1; v <= q.num_vertices(); ++v)
    j["vertices"].push_back({{"id", v}, {"col", q.pos[v - 1].col}, {"row", q.pos[v - 1].row}});
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : q.arrows) {
    nlohmann::ordered_json ja = {
        {"id", a.id}, {"tail", a.tail}, {"head", a.head}, {"class", class_name(a.cls)}};
    if (a.id <= static_cast<int>(q.names.size()) && !q.names[a.id - 1].empty())
      ja["name"] = q.names[a.id - 1];
    j["arrows"].push_back(ja);
  }
  return j.dump(2) + "\n";
}

TorusQuiver import_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    for (const char* key : {"n", "m", "vertices", "arrows"})
      if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    TorusQuiver q;
    q.n = j.at("n").get<int>();
    q.m = j.at("m").get<int>();
    q.shift = j.value("shift", 0);
    std::map<int, GridPos> verts;
    for (const auto& v : j.at("vertices"))
      verts[v.at("id").get<int>()] = {v.at("col").get<int>(), v.at("row").get<int>()};
    int expect = 1;
    for (const auto& [id, p] : verts) {
      if (id != expect++) throw ParseError("vertex ids must be dense 1..|Q0|");
      q.pos.push_back(p);
    }
    std::map<int, std::pair<TorusArrow, std::string>> arrs;
    for (const auto& a : j.at("arrows")) {
      auto cls = parse_class(a.at("class").get<std::string>());
      if (!cls) throw ParseError("unknown arrow class " + a.at("class").dump());
      TorusArrow ta{a.at("id").get<int>(), a.at("tail").get<int>(), a.at("head").get<int>(), *cls};
      arrs[ta.id] = {ta, a.value("name", std::string())};
    }
    expect = 1;
    bool any_name = false;
    for (const auto& [id, an] : arrs) {
      if (id != expect++) throw ParseError("arrow ids must be dense 1..|Q1|");
      q.arrows.push_back(an.first);
      q.names.push_back(an.second);
      any_name = any_name || !an.second.empty();
    }
    if (!any_name) q.names.clear();
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------- isomorphism

std::optional<std::vector<int>> find_isomorphism(const Quiver& a, const Quiver& b) {
  const int nv = a.num_vertices;
  if (nv != b.num_vertices || a.arrows.size() != b.arrows.size()) return std::nullopt;
  auto mult = [nv](const Quiver& q) {
    std::vector<std::vector<int>> m(nv + 1, std::vector<int>(nv + 1, 0));
    for (const auto& ar : q.arrows) ++m[ar.tail][ar.head];
    return m;
  };
  auto ma = mult(a), mb = mult(b);
  auto signature = [nv](const std::vector<std::vector<int>>& m, int v) {
    std::vector<int> outs, ins;
    for (int u = 1; u <= nv; ++u) {
      if (u == v) continue;
      if (m[v][u]) outs.push_back(m[v][u]);
      if (m[u][v]) ins.push_back(m[u][v]);
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    return std::make_tuple(m[v][v], outs, ins);
  };
  std::vector<decltype(signature(ma, 1))> sa(nv + 1), sb(nv + 1);
  for (int v = 1; v <= nv; ++v) {
    sa[v] = signature(ma, v);
    sb[v] = signature(mb, v);
  }
  std::vector<int> f(nv + 1, 0);
  std::vector<bool> used(nv + 1, false);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v > nv) return true;
    for (int w = 1; w <= nv; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = ma[v][v] == mb[w][w];
      for (int u = 1; ok && u < v; ++u)
        ok = ma[v][u] == mb[w][f[u]] && ma[u][v] == mb[f[u]][w];
      if (!ok) continue;
      f[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(1)) return std::nullopt;
  return std::vector<int>(f.begin() + 1, f.end());
}

bool isomorphic(const Quiver& a, const Quiver& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace sqa
