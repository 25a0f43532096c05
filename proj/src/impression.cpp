#include "sqa/impression.hpp"

#include <algorithm>
#include <deque>

#include "sqa/errors.hpp"

namespace sqa {

Impression build_tau(const TorusQuiver& q) {
  ValidationReport rep = validate_square(q);
  if (!rep.ok) throw NotSquare(rep.violations.front().message);
  Impression tau;
  for (const auto& a : q.arrows) tau.label.push_back(class_label(a.cls));
  return tau;
}

Monomial4 tau_path(const Path& p, const Impression& tau) {
  Monomial4 m{0, 0, 0, 0};
  for (int a : p.arrows) m = m + tau(a);
  return m;
}

bool check_well_defined(const Quiver& q, const Superpotential& W, const Impression& tau) {
  for (const auto& a : q.arrows) {
    std::map<std::tuple<int, int, Monomial4>, Rational> image;
    const AlgebraElement d = cyclic_derivative(q, W, a.id);
    for (const auto& [p, c] : d.terms()) {
      auto& slot = image[{p.tail, p.head, tau_path(p, tau)}];
      slot += c;
    }
    for (const auto& [key, c] : image)
      if (c != 0) return false;
  }
  return true;
}

InjectivityReport tau_injective_upto(GradedAlgebra& A, const Impression& tau, int D) {
  InjectivityReport rep;
  const Quiver& q = A.quiver();
  for (int i = 1; i <= q.num_vertices; ++i) {
    for (int d = 0; d <= D; ++d) {
      std::map<int, std::map<Monomial4, std::vector<Path>>> by_head;
      for (const Path& p : A.paths(i, d)) by_head[p.head][tau_path(p, tau)].push_back(p);
      for (int j = 1; j <= q.num_vertices; ++j) {
        ++rep.slices_checked;
        int dim = A.dim(i, j, d);
        int distinct = static_cast<int>(by_head[j].size());
        if (dim == distinct) continue;
        rep.ok = false;
        rep.tail = i;
        rep.head = j;
        rep.weight = d;
        rep.dim = dim;
        rep.distinct = distinct;
        for (const auto& [mono, ps] : by_head[j]) {
          for (std::size_t k = 1; k < ps.size(); ++k) {
            if (!A.equal_mod_relations(AlgebraElement(ps[0]), AlgebraElement(ps[k]))) {
              rep.colliding = {ps[0], ps[k]};
              return rep;
            }
          }
        }
        return rep;
      }
    }
  }
  return rep;
}

bool corner_commutative_check(GradedAlgebra& A, int i, int D) {
  std::vector<std::vector<Path>> by_weight(D + 1);
  for (int d = 1; d <= D; ++d) by_weight[d] = A.basis(i, i, d);
  for (int d1 = 1; d1 <= D; ++d1) {
    for (int d2 = d1; d1 + d2 <= D; ++d2) {
      for (const Path& p : by_weight[d1]) {
        for (const Path& r : by_weight[d2]) {
          AlgebraElement a(p), b(r);
          if (!A.equal_mod_relations(a * b, b * a)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::set<Monomial4>> reachable_monomials(const Quiver& q, const Impression& tau, int tail, int D) {
  std::vector<std::set<Monomial4>> seen(q.num_vertices + 1);
  std::vector<std::vector<int>> out(q.num_vertices + 1);
  for (const auto& a : q.arrows) out[a.tail].push_back(a.id);
  std::deque<std::pair<int, Monomial4>> queue;
  seen[tail].insert({0, 0, 0, 0});
  queue.push_back({tail, {0, 0, 0, 0}});
  while (!queue.empty()) {
    auto [v, m] = queue.front();
    queue.pop_front();
    for (int a : out[v]) {
      Monomial4 next = m + tau(a);
      if (degree(next) > D) continue;
      int h = q.arrow(a).head;
      if (seen[h].insert(next).second) queue.push_back({h, next});
    }
  }
  return seen;
}

HomogeneityReport homogeneity_check(const Quiver& q, const Impression& tau, int D) {
  HomogeneityReport rep;
  rep.max_degree = D;
  if (q.num_vertices == 0) return rep;
  auto corner = [&](int i) { return reachable_monomials(q, tau, i, D)[i]; };
  std::set<Monomial4> first = corner(1);
  for (int j = 2; j <= q.num_vertices; ++j) {
    std::set<Monomial4> other = corner(j);
    if (other == first) continue;
    std::optional<Monomial4> best;
    int present = 0, missing = 0;
    for (const auto& m : other)
      if (!first.count(m) && (!best || graded_less(m, *best))) {
        best = m;
        present = j;
        missing = 1;
      }
    for (const auto& m : first)
      if (!other.count(m) && (!best || graded_less(m, *best))) {
        best = m;
        present = 1;
        missing = j;
      }
    rep.ok = false;
    rep.witness = *best;
    rep.present_at = present;
    rep.missing_at = missing;
    return rep;
  }
  return rep;
}

std::vector<Monomial4> minimal_generators(const std::set<Monomial4>& elems) {
  std::vector<Monomial4> out;
  for (const auto& s : elems) {
    if (is_unit(s)) continue;
    bool decomposable = false;
    for (const auto& a : elems) {
      if (is_unit(a) || a == s || !divides(a, s)) continue;
      if (elems.count(s - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

std::set<Monomial4> center_monomials(const Quiver& q, const Impression& tau, int D) {
  HomogeneityReport h = homogeneity_check(q, tau, D);
  if (!h.ok)
    throw NotHomogeneous("corner sets differ at " + monomial_string(h.witness) + " (vertex " +
                         std::to_string(h.present_at) + " vs " + std::to_string(h.missing_at) + ")");
  return reachable_monomials(q, tau, 1, D)[1];
}

std::vector<Monomial4> center_generators(const Quiver& q, const Impression& tau, int D) {
  return minimal_generators(center_monomials(q, tau, D));
}

std::vector<std::vector<Monomial4>> vertex_module_generators(const Quiver& q, const Impression& tau, int base,
                                                              int D) {
  std::set<Monomial4> center = center_monomials(q, tau, D);
  auto reach = reachable_monomials(q, tau, base, D);
  std::vector<std::vector<Monomial4>> out(q.num_vertices + 1);
  for (int i = 1; i <= q.num_vertices; ++i) {
    for (const auto& s : reach[i]) {
      bool divisible = false;
      for (const auto& z : center) {
        if (is_unit(z) || !divides(z, s)) continue;
        if (reach[i].count(s - z)) {
          divisible = true;
          break;
        }
      }
      if (!divisible) out[i].push_back(s);
    }
    std::sort(out[i].begin(), out[i].end(), graded_less);
  }
  return out;
}

}  // namespace sqa
