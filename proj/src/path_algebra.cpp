#include "sqa/path_algebra.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "sqa/errors.hpp"

namespace sqa {

Path vertex_path(int v) { return {v, v, {}}; }

Path arrow_path(const Quiver& q, int a) {
  const Arrow& ar = q.arrow(a);
  return {ar.tail, ar.head, {a}};
}

Path path_from(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw InvalidQuiver("path_from needs at least one arrow");
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (q.arrow(arrows[k]).tail != q.arrow(arrows[k + 1]).head)
      throw InvalidQuiver("arrows do not compose");
  return {q.arrow(arrows.back()).tail, q.arrow(arrows.front()).head, arrows};
}

bool composable(const Path& p, const Path& q) { return q.head == p.tail; }

Path concat(const Path& p, const Path& q) {
  Path r{q.tail, p.head, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

Grading unit_grading(const Quiver& q) { return Grading(q.arrows.size(), 1); }

Grading square_grading(const TorusQuiver& q) {
  Grading g;
  for (const auto& a : q.arrows) g.push_back(degree(class_label(a.cls)));
  return g;
}

int path_weight(const Path& p, const Grading& g) {
  int w = 0;
  for (int a : p.arrows) w += g.at(a - 1);
  return w;
}

// ---------------------------------------------------------------- elements

void AlgebraElement::add(const Path& p, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational AlgebraElement::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, -c);
  return r;
}

AlgebraElement AlgebraElement::operator-() const { return Rational(-1) * *this; }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  AlgebraElement r;
  for (const auto& [p, c] : terms_)
    for (const auto& [q, d] : o.terms_)
      if (composable(p, q)) r.add(concat(p, q), c * d);
  return r;
}

AlgebraElement operator*(const Rational& c, const AlgebraElement& e) {
  AlgebraElement r;
  for (const auto& [p, d] : e.terms_) r.add(p, c * d);
  return r;
}

namespace {

std::string word(const Quiver& q, const std::vector<int>& arrows) {
  std::string s;
  for (int a : arrows) s += q.arrow_name(a);
  return s;
}

std::string signed_sum(const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + "*";
    out += w;
    first = false;
  }
  return out;
}

}  // namespace

std::string AlgebraElement::to_string(const Quiver& q) const {
  std::vector<std::pair<std::string, Rational>> t;
  for (const auto& [p, c] : terms_)
    t.push_back({p.is_vertex() ? "e" + std::to_string(p.tail) : word(q, p.arrows), c});
  return signed_sum(t);
}

std::vector<int> canonical_rotation(const std::vector<int>& cycle) {
  std::vector<int> best = cycle;
  std::vector<int> rot = cycle;
  for (std::size_t k = 1; k < cycle.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

void Superpotential::add_cycle(const std::vector<int>& cycle, const Rational& coeff) {
  if (cycle.empty()) throw InvalidQuiver("superpotential terms must have positive length");
  if (coeff == 0) return;
  auto key = canonical_rotation(cycle);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Superpotential Superpotential::operator-() const {
  Superpotential r;
  for (const auto& [c, x] : terms_) r.terms_.emplace(c, -x);
  return r;
}

std::string Superpotential::to_string(const Quiver& q) const {
  std::vector<std::pair<std::string, Rational>> t;
  for (const auto& [c, x] : terms_) t.push_back({word(q, c), x});
  return signed_sum(t);
}

void check_superpotential(const Quiver& q, const Superpotential& W) {
  for (const auto& [c, x] : W.terms()) {
    Path p = path_from(q, c);
    if (p.tail != p.head) throw InvalidQuiver("superpotential term " + word(q, c) + " is not a cycle");
  }
}

std::string superpotential_json(const Superpotential& W) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [c, x] : W.terms()) j.push_back({{"cycle", c}, {"coeff", to_string(x)}});
  return j.dump(2) + "\n";
}

Superpotential parse_superpotential_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw ParseError("superpotential must be a JSON list");
    Superpotential W;
    for (const auto& t : j)
      W.add_cycle(t.at("cycle").get<std::vector<int>>(), parse_rational(t.at("coeff").get<std::string>()));
    return W;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------- derivatives

AlgebraElement cyclic_derivative(const Quiver& q, const Superpotential& W, int a) {
  const Arrow& ar = q.arrow(a);
  AlgebraElement out;
  for (const auto& [c, x] : W.terms()) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != a) continue;
      std::vector<int> rest(c.begin() + k + 1, c.end());
      rest.insert(rest.end(), c.begin(), c.begin() + k);
      out.add({ar.head, ar.tail, rest}, x);
    }
  }
  return out;
}

Superpotential build_square_superpotential(const TorusQuiver& q) {
  Superpotential W;
  for (const auto& c : unit_cycles(q))
    W.add_cycle(c.arrows, c.orientation == Orientation::Clockwise ? 1 : -1);
  return W;
}

std::vector<AlgebraElement> relation_generators(const Quiver& q, const Superpotential& W) {
  std::vector<AlgebraElement> out;
  for (const auto& a : q.arrows) {
    AlgebraElement r = cyclic_derivative(q, W, a.id);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

AlgebraElement delta_left(const Quiver& q, int h, const AlgebraElement& e) {
  AlgebraElement out;
  const int th = q.arrow(h).tail;
  for (const auto& [p, c] : e.terms()) {
    if (p.arrows.empty() || p.arrows.front() != h) continue;
    out.add({p.tail, th, std::vector<int>(p.arrows.begin() + 1, p.arrows.end())}, c);
  }
  return out;
}

AlgebraElement delta_right(const Quiver& q, const AlgebraElement& e, int g) {
  AlgebraElement out;
  const int hg = q.arrow(g).head;
  for (const auto& [p, c] : e.terms()) {
    if (p.arrows.empty() || p.arrows.back() != g) continue;
    out.add({hg, p.head, std::vector<int>(p.arrows.begin(), p.arrows.end() - 1)}, c);
  }
  return out;
}

AlgebraElement w_hg(const Quiver& q, const Superpotential& W, int h, int g) {
  if (q.arrow(h).head != q.arrow(g).tail)
    throw MismatchedVertex("h(" + q.arrow_name(h) + ") != t(" + q.arrow_name(g) + ")");
  AlgebraElement left = delta_left(q, h, cyclic_derivative(q, W, g));
  AlgebraElement right = delta_right(q, cyclic_derivative(q, W, h), g);
  if (!(left == right))
    throw InternalInconsistency("W_{h,g} expressions differ: " + left.to_string(q) + " vs " + right.to_string(q));
  return left;
}

Algebra square_algebra(const TorusQuiver& q) {
  return {q.quiver(), build_square_superpotential(q), square_grading(q)};
}

// ---------------------------------------------------------------- graded engine

GradedAlgebra::GradedAlgebra(Algebra a) : alg_(std::move(a)) {
  check_quiver(alg_.quiver);
  if (alg_.grading.size() != alg_.quiver.arrows.size())
    throw InvalidQuiver("grading must assign a weight to every arrow");
  for (int w : alg_.grading)
    if (w < 1) throw InvalidQuiver("arrow weights must be positive");
  check_superpotential(alg_.quiver, alg_.W);
  relations_ = relation_generators(alg_.quiver, alg_.W);
  for (const auto& r : relations_) relation_weight_.push_back(homogeneous_weight(r));
}

int GradedAlgebra::homogeneous_weight(const AlgebraElement& e) const {
  int w = -1;
  for (const auto& [p, c] : e.terms()) {
    int pw = weight(p);
    if (w >= 0 && pw != w)
      throw InhomogeneousRelations("element mixes weights: " + e.to_string(alg_.quiver));
    w = pw;
  }
  return w < 0 ? 0 : w;
}

void GradedAlgebra::build_paths(int tail, int w) {
  Slice& s = slices_[{tail, w}];
  if (w == 0) {
    s.paths.push_back(vertex_path(tail));
  } else {
    for (const auto& b : alg_.quiver.arrows) {
      int wb = alg_.grading[b.id - 1];
      if (wb > w) continue;
      for (const Path& p : paths(tail, w - wb))
        if (p.head == b.tail) s.paths.push_back(concat(arrow_path(alg_.quiver, b.id), p));
    }
    std::sort(s.paths.begin(), s.paths.end());
  }
  for (std::size_t k = 0; k < s.paths.size(); ++k) s.index.emplace(s.paths[k], static_cast<int>(k));
}

const std::vector<Path>& GradedAlgebra::paths(int tail, int w) {
  auto it = slices_.find({tail, w});
  if (it == slices_.end()) {
    build_paths(tail, w);
    it = slices_.find({tail, w});
  }
  return it->second.paths;
}

GradedAlgebra::Slice& GradedAlgebra::slice(int tail, int w) {
  paths(tail, w);
  Slice& s = slices_.at({tail, w});
  if (s.reduced) return s;
  // Relation span in this slice: r * v for paths v, and b * x for lower slice rows x.
  for (std::size_t k = 0; k < relations_.size(); ++k) {
    int rest = w - relation_weight_[k];
    if (rest < 0) continue;
    int rt = relations_[k].terms().begin()->first.tail;
    for (const Path& v : paths(tail, rest)) {
      if (v.head != rt) continue;
      s.ideal.insert(coords(s, relations_[k] * AlgebraElement(v)));
    }
  }
  for (const auto& b : alg_.quiver.arrows) {
    int wb = alg_.grading[b.id - 1];
    if (wb > w) continue;
    Slice& lower = slice(tail, w - wb);
    AlgebraElement bp(arrow_path(alg_.quiver, b.id));
    for (const auto& [piv, row] : lower.ideal.rows()) {
      AlgebraElement x = element(tail, w - wb, row);
      AlgebraElement y = bp * x;
      if (!y.is_zero()) s.ideal.insert(coords(s, y));
    }
  }
  s.reduced = true;
  return s;
}

SparseVec GradedAlgebra::coords(Slice& s, const AlgebraElement& e) {
  SparseVec v;
  for (const auto& [p, c] : e.terms()) {
    auto it = s.index.find(p);
    if (it == s.index.end()) throw InternalInconsistency("path outside its graded slice");
    v.emplace(it->second, c);
  }
  return v;
}

int GradedAlgebra::path_index(const Path& p) {
  paths(p.tail, weight(p));
  const Slice& s = slices_.at({p.tail, weight(p)});
  return s.index.at(p);
}

AlgebraElement GradedAlgebra::element(int tail, int w, const SparseVec& v) {
  const auto& ps = paths(tail, w);
  AlgebraElement e;
  for (const auto& [k, c] : v) e.add(ps.at(k), c);
  return e;
}

std::vector<Path> GradedAlgebra::basis(int tail, int head, int w) {
  Slice& s = slice(tail, w);
  std::vector<Path> out;
  for (std::size_t k = 0; k < s.paths.size(); ++k)
    if (s.paths[k].head == head && !s.ideal.is_pivot(static_cast<int>(k))) out.push_back(s.paths[k]);
  return out;
}

int GradedAlgebra::dim(int tail, int head, int w) { return static_cast<int>(basis(tail, head, w).size()); }

int GradedAlgebra::path_count(int tail, int head, int w) {
  int n = 0;
  for (const Path& p : paths(tail, w)) n += p.head == head;
  return n;
}

SparseVec GradedAlgebra::normal_form(const AlgebraElement& e) {
  if (e.is_zero()) return {};
  int w = homogeneous_weight(e);
  int tail = e.terms().begin()->first.tail;
  for (const auto& [p, c] : e.terms())
    if (p.tail != tail) throw MismatchedVertex("normal_form needs a single tail vertex");
  Slice& s = slice(tail, w);
  SparseVec v = coords(s, e);
  s.ideal.reduce(v);
  return v;
}

bool GradedAlgebra::is_zero(const AlgebraElement& e) {
  std::map<std::pair<int, int>, AlgebraElement> parts;
  for (const auto& [p, c] : e.terms()) parts[{p.tail, weight(p)}].add(p, c);
  for (const auto& [key, part] : parts)
    if (!normal_form(part).empty()) return false;
  return true;
}

bool GradedAlgebra::equal_mod_relations(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement d = a - b;
  homogeneous_weight(d);
  return is_zero(d);
}

std::vector<Path> graded_basis(GradedAlgebra& A, int i, int j, int d) { return A.basis(i, j, d); }

bool equal_mod_relations(GradedAlgebra& A, const AlgebraElement& p1, const AlgebraElement& p2) {
  return A.equal_mod_relations(p1, p2);
}

}  // namespace sqa
