#include "sqa/resolution.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "sqa/errors.hpp"
#include "sqa/fixtures.hpp"

namespace sqa {

Matrix matrix_product(const Matrix& left, const Matrix& right) {
  if (left.empty()) return {};
  const std::size_t inner = right.size();
  for (const auto& row : left)
    if (row.size() != inner) throw InvalidQuiver("matrix shapes do not compose");
  const std::size_t cols = inner == 0 ? 0 : right.front().size();
  Matrix out(left.size(), std::vector<AlgebraElement>(cols));
  for (std::size_t r = 0; r < left.size(); ++r)
    for (std::size_t k = 0; k < inner; ++k) {
      if (left[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (!right[k][c].is_zero()) out[r][c] = out[r][c] + left[r][k] * right[k][c];
    }
  return out;
}

std::string matrix_string(const Quiver& q, const Matrix& M) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < M.size(); ++r) {
    if (r) out << "; ";
    for (std::size_t c = 0; c < M[r].size(); ++c) {
      if (c) out << ", ";
      out << (M[r][c].is_zero() ? std::string("0") : M[r][c].to_string(q));
    }
  }
  out << ']';
  return out.str();
}

ComplexCheck check_shape(const ProjectiveComplex& C, const Quiver& q) {
  ComplexCheck res;
  auto fail = [&](std::string why) {
    res.ok = false;
    res.detail = std::move(why);
    return res;
  };
  if (C.maps.size() + 1 != C.terms.size()) return fail("need one map per term after P_0");
  for (std::size_t k = 1; k < C.terms.size(); ++k) {
    const Matrix& M = C.maps[k - 1];
    if (M.size() != C.terms[k].size()) return fail("map " + std::to_string(k) + " has the wrong row count");
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (M[r].size() != C.terms[k - 1].size())
        return fail("map " + std::to_string(k) + " has the wrong column count");
      for (std::size_t c = 0; c < M[r].size(); ++c)
        for (const auto& [p, coeff] : M[r][c].terms())
          if (p.tail != C.terms[k - 1][c] || p.head != C.terms[k][r])
            return fail("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") of map " +
                        std::to_string(k) + " runs " + std::to_string(p.tail) + "->" +
                        std::to_string(p.head) + ": " + M[r][c].to_string(q));
    }
  }
  return res;
}

ComplexCheck verify_complex(GradedAlgebra& A, const ProjectiveComplex& C) {
  ComplexCheck res = check_shape(C, A.quiver());
  if (!res) return res;
  for (std::size_t k = 1; k < C.maps.size(); ++k) {
    Matrix prod = matrix_product(C.maps[k], C.maps[k - 1]);
    for (std::size_t r = 0; r < prod.size(); ++r)
      for (std::size_t c = 0; c < prod[r].size(); ++c)
        if (!prod[r][c].is_zero() && !A.is_zero(prod[r][c])) {
          res.ok = false;
          res.detail = "d" + std::to_string(k) + " d" + std::to_string(k + 1) + " entry (" +
                       std::to_string(r + 1) + "," + std::to_string(c + 1) +
                       ") = " + prod[r][c].to_string(A.quiver());
          return res;
        }
  }
  return res;
}

std::vector<std::vector<int>> generator_shifts(GradedAlgebra& A, const ProjectiveComplex& C) {
  std::vector<std::vector<int>> shifts(C.terms.size());
  shifts[0].assign(C.terms[0].size(), 0);
  for (std::size_t k = 1; k < C.terms.size(); ++k) {
    const Matrix& M = C.maps[k - 1];
    for (std::size_t r = 0; r < M.size(); ++r) {
      std::optional<int> s;
      for (std::size_t c = 0; c < M[r].size(); ++c) {
        if (M[r][c].is_zero()) continue;
        int here = shifts[k - 1][c] + A.homogeneous_weight(M[r][c]);
        if (s && *s != here)
          throw NotHomogeneous("row " + std::to_string(r + 1) + " of map " + std::to_string(k) +
                               " mixes generator degrees");
        s = here;
      }
      if (!s) throw NotHomogeneous("row " + std::to_string(r + 1) + " of map " + std::to_string(k) + " is zero");
      shifts[k].push_back(*s);
    }
  }
  return shifts;
}

bool JunctionHomology::exact() const {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

bool ExactnessReport::exact() const {
  return std::all_of(junctions.begin(), junctions.end(), [](const auto& j) { return j.exact(); });
}

const JunctionHomology* ExactnessReport::at(int position) const {
  for (const auto& j : junctions)
    if (j.position == position) return &j;
  return nullptr;
}

namespace {

int free_dim(GradedAlgebra& A, int tail, int w) {
  if (w < 0) return 0;
  int d = 0;
  for (int head = 1; head <= A.quiver().num_vertices; ++head) d += A.dim(tail, head, w);
  return d;
}

int term_dim(GradedAlgebra& A, const std::vector<int>& term, const std::vector<int>& shift, int t) {
  int d = 0;
  for (std::size_t c = 0; c < term.size(); ++c) d += free_dim(A, term[c], t - shift[c]);
  return d;
}

// Rank of P_k -> P_{k-1} in total degree t.
int map_rank(GradedAlgebra& A, const ProjectiveComplex& C, const std::vector<std::vector<int>>& shifts, int k,
             int t) {
  const auto& src = C.terms[k];
  const auto& dst = C.terms[k - 1];
  const Matrix& M = C.maps[k - 1];
  std::vector<int> offset(dst.size(), 0);
  int total = 0;
  for (std::size_t c = 0; c < dst.size(); ++c) {
    offset[c] = total;
    int w = t - shifts[k - 1][c];
    if (w >= 0) total += static_cast<int>(A.paths(dst[c], w).size());
  }
  std::vector<SparseVec> images;
  for (std::size_t r = 0; r < src.size(); ++r) {
    int w = t - shifts[k][r];
    if (w < 0) continue;
    for (int head = 1; head <= A.quiver().num_vertices; ++head) {
      for (const Path& p : A.basis(src[r], head, w)) {
        SparseVec img;
        AlgebraElement m(p);
        for (std::size_t c = 0; c < dst.size(); ++c) {
          if (M[r][c].is_zero()) continue;
          AlgebraElement e = m * M[r][c];
          if (e.is_zero()) continue;
          for (const auto& [idx, val] : A.normal_form(e)) img[offset[c] + idx] += val;
        }
        for (auto it = img.begin(); it != img.end();) it = it->second == 0 ? img.erase(it) : std::next(it);
        images.push_back(std::move(img));
      }
    }
  }
  return rank_of(images);
}

}  // namespace

ExactnessReport exactness_report(GradedAlgebra& A, const ProjectiveComplex& C, int D) {
  ComplexCheck shape = check_shape(C, A.quiver());
  if (!shape) throw InvalidQuiver(shape.detail);
  auto shifts = generator_shifts(A, C);
  const int N = C.length();
  ExactnessReport rep;
  rep.max_degree = D;
  std::vector<std::vector<int>> rank(N + 2, std::vector<int>(D + 1, 0));
  for (int k = 1; k <= N; ++k)
    for (int t = 0; t <= D; ++t) rank[k][t] = map_rank(A, C, shifts, k, t);
  const int top = C.terminal ? N : N - 1;
  for (int k = 0; k <= top; ++k) {
    JunctionHomology j;
    j.position = k;
    if (k == 0) j.label = "coker d1 / simple";
    else if (k == N) j.label = "ker d" + std::to_string(k);
    else j.label = "ker d" + std::to_string(k) + " / im d" + std::to_string(k + 1);
    for (int t = 0; t <= D; ++t) {
      int dim = term_dim(A, C.terms[k], shifts[k], t);
      int h = dim - (k > 0 ? rank[k][t] : 0) - (k < N ? rank[k + 1][t] : 0);
      if (k == 0 && t == 0) h -= static_cast<int>(C.terms[0].size());
      j.dims.push_back(h);
    }
    rep.junctions.push_back(std::move(j));
  }
  return rep;
}

ProjectiveComplex BDComplex::as_complex() const {
  ProjectiveComplex C;
  C.name = "BD(" + std::to_string(vertex) + ")";
  C.terms = {T0, T1, T2, T3};
  C.maps = {delta0, delta1, delta2};
  C.terminal = true;
  return C;
}

BDComplex build_bd_complex(const Algebra& A, int i, std::vector<int> g_order, std::vector<int> h_order) {
  const Quiver& q = A.quiver;
  if (i < 1 || i > q.num_vertices) throw InvalidQuiver("vertex " + std::to_string(i) + " out of range");
  if (g_order.empty()) g_order = q.out_arrows(i);
  if (h_order.empty()) h_order = q.in_arrows(i);
  if (g_order.empty() || h_order.empty())
    throw EmptyStar("vertex " + std::to_string(i) + " has no " + (g_order.empty() ? "out" : "in") + "-arrows");
  for (int g : g_order)
    if (q.arrow(g).tail != i) throw MismatchedVertex(q.arrow_name(g) + " does not leave vertex " + std::to_string(i));
  for (int h : h_order)
    if (q.arrow(h).head != i) throw MismatchedVertex(q.arrow_name(h) + " does not enter vertex " + std::to_string(i));

  BDComplex C;
  C.vertex = i;
  C.g = g_order;
  C.h = h_order;
  C.T3 = C.T0 = {i};
  for (int h : C.h) C.T2.push_back(q.arrow(h).tail);
  for (int g : C.g) C.T1.push_back(q.arrow(g).head);
  C.delta2.assign(1, {});
  for (int h : C.h) C.delta2[0].push_back(AlgebraElement(arrow_path(q, h)));
  for (int h : C.h) {
    std::vector<AlgebraElement> row;
    for (int g : C.g) row.push_back(w_hg(q, A.W, h, g));
    C.delta1.push_back(std::move(row));
  }
  for (int g : C.g) C.delta0.push_back({AlgebraElement(arrow_path(q, g))});
  return C;
}

std::pair<std::vector<int>, std::vector<int>> clockwise_star(const TorusQuiver& q, int i) {
  struct Item {
    double angle;
    int id;
  };
  std::vector<Item> out, in;
  for (const auto& a : q.arrows) {
    Displacement d = displacement(a.cls);
    if (a.tail == i) out.push_back({std::atan2(static_cast<double>(d.dy), static_cast<double>(d.dx)), a.id});
    if (a.head == i) in.push_back({std::atan2(static_cast<double>(-d.dy), static_cast<double>(-d.dx)), a.id});
  }
  auto order = [](std::vector<Item>& v) {
    std::sort(v.begin(), v.end(), [](const Item& x, const Item& y) {
      if (x.angle != y.angle) return x.angle > y.angle;
      return x.id < y.id;
    });
    std::vector<int> ids;
    for (const auto& it : v) ids.push_back(it.id);
    return ids;
  };
  return {order(out), order(in)};
}

BDComplex build_bd_complex(const TorusQuiver& tq, int i) {
  auto [g, h] = clockwise_star(tq, i);
  if (g.empty() || h.empty())
    throw EmptyStar("vertex " + std::to_string(i) + " has no " + (g.empty() ? "out" : "in") + "-arrows");
  Algebra A = square_algebra(tq);
  const std::size_t m = g.size();
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<int> rot(g.begin() + r, g.end());
    rot.insert(rot.end(), g.begin(), g.begin() + r);
    bool first = !w_hg(A.quiver, A.W, h[0], rot[0]).is_zero();
    bool second = h.size() < 2 || !w_hg(A.quiver, A.W, h[1], rot[0]).is_zero();
    if (first && second) {
      g = rot;
      break;
    }
  }
  return build_bd_complex(A, i, g, h);
}

ComplexCheck verify_complex(GradedAlgebra& A, const BDComplex& C) {
  const Quiver& q = A.quiver();
  const Superpotential& W = A.algebra().W;
  ComplexCheck res;
  for (std::size_t j = 0; j < C.g.size(); ++j) {
    AlgebraElement sum;
    for (std::size_t k = 0; k < C.h.size(); ++k) sum = sum + C.delta2[0][k] * C.delta1[k][j];
    AlgebraElement want = cyclic_derivative(q, W, C.g[j]);
    if (!(sum == want)) {
      res.ok = false;
      res.detail = "sum_k h_k W_{h_k," + q.arrow_name(C.g[j]) + "} = " + sum.to_string(q) + " but the derivative is " +
                   want.to_string(q);
      return res;
    }
  }
  for (std::size_t k = 0; k < C.h.size(); ++k) {
    AlgebraElement sum;
    for (std::size_t j = 0; j < C.g.size(); ++j) sum = sum + C.delta1[k][j] * C.delta0[j][0];
    AlgebraElement want = cyclic_derivative(q, W, C.h[k]);
    if (!(sum == want)) {
      res.ok = false;
      res.detail = "sum_j W_{" + q.arrow_name(C.h[k]) + ",g_j} g_j = " + sum.to_string(q) +
                   " but the derivative is " + want.to_string(q);
      return res;
    }
  }
  return verify_complex(A, C.as_complex());
}

ExactnessReport exactness_report(GradedAlgebra& A, const BDComplex& C, int D) {
  ExactnessReport rep = exactness_report(A, C.as_complex(), D);
  const char* labels[] = {"coker delta0 / simple", "ker delta0 / im delta1", "ker delta1 / im delta2", "ker delta2"};
  for (auto& j : rep.junctions) j.label = labels[j.position];
  return rep;
}

bool bidiagonal_with_corner(const BDComplex& C) {
  const std::size_t n = C.h.size();
  if (n != C.g.size()) return false;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      bool expected = k == j || k == (j + 1) % n;
      if (expected == C.delta1[k][j].is_zero()) return false;
    }
  return true;
}

bool RightMultKernel::zero() const {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

RightMultKernel right_mult_kernel(GradedAlgebra& A, int g, int D) {
  const Quiver& q = A.quiver();
  const Arrow& ga = q.arrow(g);
  const Path gp = arrow_path(q, g);
  RightMultKernel out;
  out.arrow = g;

  std::vector<AlgebraElement> generators;
  for (const auto& h : q.arrows) {
    if (h.head != ga.tail) continue;
    AlgebraElement whg = w_hg(q, A.algebra().W, h.id, g);
    if (whg.is_zero()) continue;
    if (whg * AlgebraElement(gp) == cyclic_derivative(q, A.algebra().W, h.id)) {
      out.with_predicted.push_back(h.id);
      generators.push_back(whg);
    }
  }

  for (int w = 0; w <= D; ++w) {
    std::vector<Path> src;
    for (int head = 1; head <= q.num_vertices; ++head)
      for (const Path& p : A.basis(ga.head, head, w)) src.push_back(p);
    std::vector<SparseVec> images;
    for (const Path& p : src) images.push_back(A.normal_form(AlgebraElement(p) * AlgebraElement(gp)));
    KernelResult ker = kernel_of(images);
    out.dims.push_back(static_cast<int>(ker.kernel.size()));
    if (!ker.kernel.empty()) {
      AlgebraElement witness;
      for (const auto& [idx, c] : ker.kernel.front()) witness.add(src[idx], c);
      out.witnesses.push_back(witness);
    }

    std::vector<SparseVec> ideal;
    for (const AlgebraElement& gen : generators) {
      int s = A.homogeneous_weight(gen);
      if (w < s) continue;
      int from = gen.terms().begin()->first.head;
      for (const Path& b : A.paths(from, w - s)) {
        AlgebraElement e = AlgebraElement(b) * gen;
        if (!e.is_zero()) ideal.push_back(A.normal_form(e));
      }
    }
    out.predicted.push_back(rank_of(ideal));
  }
  return out;
}

namespace {

// "x4", "-y6", "3 x", "-a2 c", "0"; words are composition order.
AlgebraElement entry(const Quiver& q, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Rational coeff = 1;
  std::vector<int> arrows;
  bool first = true;
  while (in >> tok) {
    if (first && tok == "0") return {};
    if (first && tok[0] == '-') {
      coeff = -coeff;
      tok = tok.substr(1);
    }
    first = false;
    if (!tok.empty() && std::isdigit(static_cast<unsigned char>(tok[0]))) {
      coeff *= Rational(std::stol(tok));
      continue;
    }
    auto id = q.find_arrow(tok);
    if (!id) throw UnknownArrow(tok);
    arrows.push_back(*id);
  }
  return AlgebraElement(path_from(q, arrows), coeff);
}

Matrix matrix(const Quiver& q, const std::vector<std::vector<std::string>>& rows) {
  Matrix M;
  for (const auto& r : rows) {
    std::vector<AlgebraElement> row;
    for (const auto& s : r) row.push_back(entry(q, s));
    M.push_back(std::move(row));
  }
  return M;
}

}  // namespace

std::vector<FixtureResolution> fixture_resolutions() {
  std::vector<FixtureResolution> out;

  {
    FixtureResolution f{"a2b", fixtures::a2b(), {}, 3};
    const Quiver& q = f.algebra.quiver;
    Matrix d2 = matrix(q, {{"b", "a"}, {"a", "0"}});
    Matrix d3 = matrix(q, {{"a", "b"}, {"0", "a"}});
    Matrix d4 = matrix(q, {{"0", "a"}, {"a", "b"}});
    f.complex.name = f.name;
    f.complex.terms = {{1}};
    f.complex.maps = {matrix(q, {{"a"}, {"b"}})};
    for (int k = 0; k < 2; ++k)
      for (const Matrix* d : {&d2, &d3, &d4}) f.complex.maps.push_back(*d);
    for (std::size_t k = 1; k <= f.complex.maps.size(); ++k) f.complex.terms.push_back({1, 1});
    out.push_back(std::move(f));
  }
  {
    FixtureResolution f{"c1ba_c2ab", fixtures::c1ba_c2ab(), {}, 2};
    const Quiver& q = f.algebra.quiver;
    Matrix d2 = matrix(q, {{"a", "-c2"}, {"0", "b"}});
    Matrix d3 = matrix(q, {{"b", "c1"}, {"0", "a"}});
    f.complex.name = f.name;
    f.complex.terms = {{1}, {1, 2}};
    f.complex.maps = {matrix(q, {{"c1"}, {"a"}})};
    for (int k = 0; k < 3; ++k) {
      f.complex.maps.push_back(d2);
      f.complex.terms.push_back({2, 1});
      f.complex.maps.push_back(d3);
      f.complex.terms.push_back({1, 2});
    }
    out.push_back(std::move(f));
  }
  {
    FixtureResolution f{"six_vertex", fixtures::six_vertex(), {}, 3};
    const Quiver& q = f.algebra.quiver;
    Matrix d4 = matrix(q, {{"y1", "-x2"}, {"-x1", "y2"}});
    Matrix d5 = matrix(q, {{"y6", "x4"}, {"x6", "y4"}});
    Matrix d6 = matrix(q, {{"x5", "-y3"}, {"y5", "-x3"}});
    f.complex.name = f.name;
    f.complex.terms = {{1}, {4, 6}, {5, 3}, {1, 2}, {6, 4}, {5, 3}, {1, 2}, {6, 4}, {5, 3}};
    f.complex.maps = {matrix(q, {{"x1"}, {"y1"}}), matrix(q, {{"x4", "-y6"}, {"-y4", "x6"}}),
                      matrix(q, {{"x5", "y3"}, {"y5", "x3"}}), d4, d5, d6, d4, d5};
    out.push_back(std::move(f));
  }
  {
    FixtureResolution f{"one_loop_cubic", fixtures::one_loop_cubic(), {}, 2};
    const Quiver& q = f.algebra.quiver;
    f.complex.name = f.name;
    f.complex.terms = {{1}};
    for (int k = 1; k <= 8; ++k) {
      f.complex.maps.push_back(matrix(q, {{k % 2 ? "x" : "3 x"}}));
      f.complex.terms.push_back({1});
    }
    out.push_back(std::move(f));
  }
  {
    FixtureResolution f{"second_family_n1", fixtures::second_family_n1(), {}, 0};
    const Quiver& q = f.algebra.quiver;
    f.complex.name = f.name;
    f.complex.terms = {{3}, {2, 4}, {1}, {3}, {2, 5}, {1}};
    f.complex.maps = {matrix(q, {{"b1"}, {"b2"}}), matrix(q, {{"a1", "-a2 c"}}), matrix(q, {{"d1"}}),
                      matrix(q, {{"b1"}, {"-c b2"}}), matrix(q, {{"a1", "a2"}})};
    f.complex.terminal = true;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace sqa
