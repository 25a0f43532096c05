#include "sqa/mutation.hpp"

#include <algorithm>

#include "sqa/errors.hpp"

namespace sqa {

namespace {

std::string primed(const std::string& name) { return name.empty() ? name : name + "'"; }

bool complementary(ArrowClass a, ArrowClass b) {
  Displacement da = displacement(a), db = displacement(b);
  return da.dx + db.dx == 0 && da.dy + db.dy == 0;
}

}  // namespace

Quiver quiver_mutate(const Quiver& q, int i) {
  check_quiver(q);
  if (i < 1 || i > q.num_vertices) throw InvalidQuiver("vertex " + std::to_string(i) + " out of range");
  struct Edge {
    int tail, head;
    std::string name;
    bool added;
    bool removed = false;
  };
  std::vector<Edge> edges;
  for (const auto& a : q.arrows) {
    bool loop = a.tail == a.head;
    if (!loop && (a.tail == i || a.head == i)) edges.push_back({a.head, a.tail, primed(a.name), false});
    else edges.push_back({a.tail, a.head, a.name, false});
  }
  for (const auto& a : q.arrows) {
    if (a.head != i || a.tail == i) continue;
    for (const auto& b : q.arrows) {
      if (b.tail != i || b.head == i) continue;
      std::string name = a.name.empty() || b.name.empty() ? std::string() : "[" + b.name + a.name + "]";
      edges.push_back({a.tail, b.head, name, true});
    }
  }
  for (std::size_t c = 0; c < edges.size(); ++c) {
    if (!edges[c].added || edges[c].removed) continue;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e == c || edges[e].removed) continue;
      if (edges[e].tail == edges[c].head && edges[e].head == edges[c].tail) {
        edges[c].removed = edges[e].removed = true;
        break;
      }
    }
  }
  Quiver out;
  out.num_vertices = q.num_vertices;
  for (const auto& e : edges)
    if (!e.removed) out.add_arrow(e.tail, e.head, e.name);
  return out;
}

std::pair<TorusQuiver, Impression> tau_mutate(const TorusQuiver& q, const Impression& tau, int i,
                                              bool validate_input) {
  if (validate_input) {
    ValidationReport rep = validate_square(q);
    if (!rep.ok) throw NotSquare(rep.violations.front().message);
  }
  if (i < 1 || i > q.num_vertices()) throw InvalidQuiver("vertex " + std::to_string(i) + " out of range");
  if (tau.label.size() != q.arrows.size()) throw InvalidQuiver("impression does not cover every arrow");

  auto class_of = [&](const Monomial4& label) {
    auto c = class_for_label(label);
    if (!c) throw ClassUnresolvable("no arrow class carries " + monomial_string(label));
    return *c;
  };
  auto land = [&](int from, ArrowClass c, int sign) {
    GridPos p = q.pos[from - 1];
    Displacement d = displacement(c);
    int v = q.vertex_at(p.col + sign * d.dx, p.row + sign * d.dy);
    if (v == 0) throw ClassUnresolvable(class_name(c) + " from vertex " + std::to_string(from) + " leaves the grid");
    return v;
  };

  struct Edge {
    int tail, head;
    ArrowClass cls;
    Monomial4 label;
    std::string name;
    bool added;
    bool removed = false;
  };
  std::vector<Edge> edges;
  int in_deg = 0, out_deg = 0;
  for (const auto& a : q.arrows) {
    const Monomial4& L = tau(a.id);
    std::string name = a.id <= static_cast<int>(q.names.size()) ? q.names[a.id - 1] : std::string();
    bool loop = a.tail == a.head;
    if (!loop && a.tail == i) {
      ++out_deg;
      ArrowClass c = class_of(L);
      edges.push_back({land(i, c, -1), i, c, L, primed(name), false});
    } else if (!loop && a.head == i) {
      ++in_deg;
      ArrowClass c = class_of(L);
      edges.push_back({i, land(i, c, 1), c, L, primed(name), false});
    } else {
      edges.push_back({a.tail, a.head, a.cls, L, name, false});
    }
  }
  const std::size_t replaced = edges.size();

  auto exists = [&](int tail, int head) {
    for (std::size_t e = 0; e < replaced; ++e)
      if (edges[e].tail == tail && edges[e].head == head) return true;
    return false;
  };
  for (const auto& a : q.arrows) {
    if (a.head != i || a.tail == i) continue;
    for (const auto& b : q.arrows) {
      if (b.tail != i || b.head == i) continue;
      if (!exists(b.head, i) || !exists(i, a.tail)) continue;
      Monomial4 L = tau(a.id) + tau(b.id);
      ArrowClass c = class_of(L);
      if (land(a.tail, c, 1) != b.head)
        throw ClassUnresolvable(class_name(c) + " from vertex " + std::to_string(a.tail) + " misses vertex " +
                                std::to_string(b.head));
      edges.push_back({a.tail, b.head, c, L, std::string(), true});
    }
  }

  for (std::size_t c = 0; c < edges.size(); ++c) {
    if (!edges[c].added || edges[c].removed) continue;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e == c || edges[e].removed) continue;
      if (edges[e].tail == edges[c].head && edges[e].head == edges[c].tail &&
          complementary(edges[e].cls, edges[c].cls)) {
        edges[c].removed = edges[e].removed = true;
        break;
      }
    }
  }

  TorusQuiver out;
  out.n = q.n;
  out.m = q.m;
  out.shift = q.shift;
  out.pos = q.pos;
  Impression t;
  bool named = false;
  for (const auto& e : edges) named = named || !e.name.empty();
  for (const auto& e : edges) {
    if (e.removed) continue;
    out.add_arrow(e.tail, e.head, e.cls, named ? e.name : std::string());
    t.label.push_back(e.label);
  }
  for (std::size_t k = 0; k < out.arrows.size(); ++k)
    if (!(t.label[k] == class_label(out.arrows[k].cls)))
      throw InternalInconsistency("label changed on arrow " + std::to_string(k + 1));
  if (validate_input && in_deg == 2 && out_deg == 2) {
    ValidationReport rep = validate_square(out);
    if (!rep.ok) throw NotSquare("mutation at a degree-2 vertex: " + rep.violations.front().message);
  }
  return {out, t};
}

bool center_invariance_check(const TorusQuiver& q1, const TorusQuiver& q2, int D) {
  return center_monomials(q1.quiver(), build_tau(q1), D) == center_monomials(q2.quiver(), build_tau(q2), D);
}

}  // namespace sqa
