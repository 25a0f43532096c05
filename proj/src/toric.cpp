#include "sqa/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "sqa/errors.hpp"
#include "sqa/rational.hpp"

namespace sqa {

namespace {

using Vec4 = std::array<long long, 4>;

long long dot(const Vec4& a, const Monomial4& b) {
  long long s = 0;
  for (int k = 0; k < 4; ++k) s += a[k] * b[k];
  return s;
}

// Integer row echelon form with positive pivots.
std::vector<Monomial4> hermite(std::vector<Monomial4> rows) {
  std::vector<Monomial4> out;
  std::size_t r = 0;
  for (int c = 0; c < 4 && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k][c] != 0 && (best == rows.size() || std::abs(rows[k][c]) < std::abs(rows[best][c]))) best = k;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t k = r + 1; k < rows.size(); ++k) {
        if (rows[k][c] == 0) continue;
        int f = rows[k][c] / rows[r][c];
        rows[k] = rows[k] - scaled(rows[r], f);
        others = others || rows[k][c] != 0;
      }
      if (!others) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) rows[r] = scaled(rows[r], -1);
    for (std::size_t k = 0; k < r; ++k) {
      int f = rows[k][c] / rows[r][c];
      if (rows[k][c] - f * rows[r][c] < 0) --f;
      rows[k] = rows[k] - scaled(rows[r], f);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// Rational nullspace of the rows, scaled to primitive integer vectors.
std::vector<Vec4> integer_nullspace(const std::vector<Vec4>& rows) {
  std::vector<std::array<Rational, 4>> m;
  for (const auto& r : rows) m.push_back({Rational(static_cast<long>(r[0])), Rational(static_cast<long>(r[1])), Rational(static_cast<long>(r[2])), Rational(static_cast<long>(r[3]))});
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < 4 && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == rank || m[k][c] == 0) continue;
      Rational f = m[k][c];
      for (int j = 0; j < 4; ++j) m[k][j] -= f * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<Vec4> out;
  for (int free = 0; free < 4; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::array<Rational, 4> v{0, 0, 0, 0};
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m[k][free];
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Vec4 iv{};
    mpz_class g = 0;
    for (int j = 0; j < 4; ++j) {
      mpz_class num = v[j].get_num() * (l / v[j].get_den());
      iv[j] = num.get_si();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g > 1)
      for (auto& x : iv) x /= g.get_si();
    out.push_back(iv);
  }
  return out;
}

}  // namespace

ExponentMonoid::ExponentMonoid(std::vector<Monomial4> generators) {
  for (const auto& g : generators) {
    if (!nonnegative(g)) throw InvalidQuiver("monoid generators must lie in N^4");
    if (is_unit(g)) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end(), graded_less);
  hnf_ = hermite(gens_);
}

bool ExponentMonoid::contains(const Monomial4& v) const {
  if (is_unit(v)) return true;
  if (!nonnegative(v)) return false;
  if (yes_.count(v)) return true;
  if (no_.count(v)) return false;
  for (const auto& g : gens_) {
    if (divides(g, v) && contains(v - g)) {
      yes_.insert(v);
      return true;
    }
  }
  no_.insert(v);
  return false;
}

bool ExponentMonoid::in_lattice(const Monomial4& v) const {
  Monomial4 r = v;
  int k = 0;
  for (int c = 0; c < 4; ++c) {
    if (k < static_cast<int>(hnf_.size()) && hnf_[k][c] != 0) {
      if (r[c] % hnf_[k][c] != 0) return false;
      r = r - scaled(hnf_[k], r[c] / hnf_[k][c]);
      ++k;
    } else if (r[c] != 0) {
      return false;
    }
  }
  return true;
}

int monoid_rank(const ExponentMonoid& M) { return static_cast<int>(M.lattice_basis().size()); }

bool monoids_equal(const ExponentMonoid& a, const ExponentMonoid& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

std::vector<Monomial4> hilbert_basis_of(const ExponentMonoid& M) {
  std::vector<Monomial4> out;
  for (const auto& g : M.generators()) {
    std::vector<Monomial4> others;
    for (const auto& h : M.generators())
      if (h != g) others.push_back(h);
    if (!ExponentMonoid(others).contains(g)) out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------- cone

ConeTest::ConeTest(const std::vector<Monomial4>& gens) {
  std::vector<Vec4> rows;
  for (const auto& g : gens) rows.push_back({g[0], g[1], g[2], g[3]});
  complement_ = integer_nullspace(rows);
  rank_ = 4 - static_cast<int>(complement_.size());
  if (rank_ == 0) return;
  const int k = rank_ - 1;
  std::vector<int> idx(k);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      std::vector<Vec4> m = complement_;
      for (int i : idx) m.push_back(rows[i]);
      auto normal = integer_nullspace(m);
      if (normal.size() != 1) return;
      Vec4 u = normal[0];
      bool pos = false, neg = false;
      for (const auto& g : gens) {
        long long d = dot(u, g);
        pos = pos || d > 0;
        neg = neg || d < 0;
      }
      if (pos && neg) return;
      if (neg)
        for (auto& x : u) x = -x;
      if (std::find(facets_.begin(), facets_.end(), u) == facets_.end()) facets_.push_back(u);
      return;
    }
    for (int i = start; i < static_cast<int>(rows.size()); ++i) {
      idx[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
}

bool ConeTest::contains(const Monomial4& v) const {
  for (const auto& c : complement_)
    if (dot(c, v) != 0) return false;
  for (const auto& u : facets_)
    if (dot(u, v) < 0) return false;
  return true;
}

SaturationReport saturation_check(const ExponentMonoid& M, int bound) {
  SaturationReport rep;
  ConeTest cone(M.generators());
  std::vector<Monomial4> points;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (int c = 0; a + b + c <= bound; ++c)
        for (int d = 0; a + b + c + d <= bound; ++d) points.push_back({a, b, c, d});
  std::sort(points.begin(), points.end(), graded_less);
  for (const auto& v : points) {
    if (is_unit(v) || !M.in_lattice(v) || !cone.contains(v)) continue;
    ++rep.points_checked;
    if (!M.contains(v)) {
      rep.saturated = false;
      rep.witness = v;
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- regular sequence and socle

std::pair<int, int> effective_periods(int n, int m, int shift) {
  return {n, m * (n / std::gcd(n, shift))};
}

RegularSequence regular_sequence_cycles(const ExponentMonoid& Z, int n, int m) {
  RegularSequence rs;
  rs.n = n;
  rs.m = m;
  rs.swapped = n > m;
  // In the swapped frame the horizontal family uses y and the vertical one x.
  auto horiz = [&](int t, bool first) -> Monomial4 {
    int len = rs.swapped ? m : n;
    int e = first ? t : len - t;
    if (!rs.swapped) return first ? Monomial4{len, 0, e, e} : Monomial4{0, len, e, e};
    return first ? Monomial4{e, e, len, 0} : Monomial4{e, e, 0, len};
  };
  auto vert = [&](int s, bool first) -> Monomial4 {
    int len = rs.swapped ? n : m;
    int e = first ? s : len - s;
    if (!rs.swapped) return first ? Monomial4{e, e, len, 0} : Monomial4{e, e, 0, len};
    return first ? Monomial4{len, 0, e, e} : Monomial4{0, len, e, e};
  };
  int hl = rs.swapped ? m : n, vl = rs.swapped ? n : m;
  bool found = false;
  for (int t = 0; t <= hl && !found; ++t) {
    if (Z.contains(horiz(t, true)) && Z.contains(horiz(t, false))) {
      rs.t = t;
      rs.alpha1 = horiz(t, true);
      rs.alpha2 = horiz(t, false);
      found = true;
    }
  }
  if (!found) throw NotFound("no horizontal cycle pair alpha1, alpha2 in the center monoid");
  found = false;
  for (int s = 0; s <= vl && !found; ++s) {
    if (Z.contains(vert(s, true)) && Z.contains(vert(s, false))) {
      rs.s = s;
      rs.beta1 = vert(s, true);
      rs.beta2 = vert(s, false);
      found = true;
    }
  }
  if (!found) throw NotFound("no vertical cycle pair beta1, beta2 in the center monoid");
  return rs;
}

namespace {

std::vector<Monomial4> monoid_elements(const ExponentMonoid& Z, int cap) {
  std::set<Monomial4> seen{{0, 0, 0, 0}};
  std::vector<Monomial4> frontier{{0, 0, 0, 0}};
  while (!frontier.empty()) {
    std::vector<Monomial4> next;
    for (const auto& e : frontier)
      for (const auto& g : Z.generators()) {
        Monomial4 f = e + g;
        if (degree(f) <= cap && seen.insert(f).second) next.push_back(f);
      }
    frontier = std::move(next);
  }
  std::vector<Monomial4> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

SocleReport quotient_socle(const ExponentMonoid& Z, const std::vector<Monomial4>& ideal, int cap) {
  SocleReport rep;
  rep.cap = cap;
  rep.ideal = ideal;
  int width = 1;
  for (const auto& g : Z.generators()) width = std::max(width, degree(g));
  std::vector<Monomial4> survivors;
  std::map<int, int> per_degree;
  for (const auto& e : monoid_elements(Z, cap)) {
    bool killed = false;
    for (const auto& a : ideal)
      if (divides(a, e) && Z.contains(e - a)) {
        killed = true;
        break;
      }
    if (!killed) {
      survivors.push_back(e);
      ++per_degree[degree(e)];
    }
  }
  // Finite once a full window of generator degrees is empty.
  int top = -1;
  for (int d = 0; d + width - 1 <= cap; ++d) {
    bool empty = true;
    for (int k = d; k < d + width; ++k) empty = empty && per_degree[k] == 0;
    if (empty) {
      top = d;
      break;
    }
  }
  if (top < 0) {
    rep.finite = false;
    if (!survivors.empty()) rep.unbounded = survivors.back();
    return rep;
  }
  rep.finite = true;
  std::set<Monomial4> basis;
  for (const auto& e : survivors)
    if (degree(e) < top) basis.insert(e);
  rep.quotient_basis.assign(basis.begin(), basis.end());
  std::sort(rep.quotient_basis.begin(), rep.quotient_basis.end(), graded_less);
  for (const auto& e : rep.quotient_basis) {
    bool annihilated = true;
    for (const auto& g : Z.generators())
      if (basis.count(e + g)) {
        annihilated = false;
        break;
      }
    if (annihilated) rep.socle.push_back(e);
  }
  return rep;
}

}  // namespace

SocleReport monomial_quotient_socle(const ExponentMonoid& Z, const std::vector<Monomial4>& ideal, int cap) {
  SocleReport rep = quotient_socle(Z, ideal, cap);
  if (!rep.finite)
    throw QuotientNotFiniteWithinCap("elements outside the ideal persist up to degree " + std::to_string(cap) +
                                     (rep.unbounded ? ", e.g. " + monomial_string(*rep.unbounded) : ""));
  return rep;
}

SocleReport try_gorenstein_socle(const ExponentMonoid& Z, const RegularSequence& rs, int cap) {
  SocleReport rep = quotient_socle(Z, {rs.alpha1, rs.alpha2, rs.beta1}, cap);
  rep.expected = scaled(kSigma, std::min(rs.n, rs.m) - 1);
  return rep;
}

SocleReport gorenstein_socle(const ExponentMonoid& Z, const RegularSequence& rs, int cap) {
  SocleReport rep = monomial_quotient_socle(Z, {rs.alpha1, rs.alpha2, rs.beta1}, cap);
  rep.expected = scaled(kSigma, std::min(rs.n, rs.m) - 1);
  return rep;
}

// ---------------------------------------------------------------- binomials

std::vector<BinomialRelation> binomial_relations(const ExponentMonoid& M, int degree_bound) {
  const auto& gens = M.generators();
  const int k = static_cast<int>(gens.size());
  std::map<Monomial4, std::vector<std::vector<int>>> by_value;
  std::vector<int> mult(k, 0);
  std::function<void(int, int, Monomial4)> walk = [&](int i, int left, Monomial4 value) {
    if (i == k) {
      by_value[value].push_back(mult);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      mult[i] = c;
      walk(i + 1, left - c, value + scaled(gens[i], c));
    }
    mult[i] = 0;
  };
  walk(0, degree_bound, {0, 0, 0, 0});
  std::vector<BinomialRelation> all;
  for (const auto& [value, list] : by_value)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        auto lo = std::min(list[a], list[b]), hi = std::max(list[a], list[b]);
        all.push_back({hi, lo, value});
      }
  auto leq = [](const std::vector<int>& u, const std::vector<int>& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] > v[i]) return false;
    return true;
  };
  std::vector<BinomialRelation> out;
  for (const auto& r : all) {
    bool minimal = true;
    for (const auto& o : all) {
      if (o.lhs == r.lhs && o.rhs == r.rhs) continue;
      if ((leq(o.lhs, r.lhs) && leq(o.rhs, r.rhs)) || (leq(o.lhs, r.rhs) && leq(o.rhs, r.lhs))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(r);
  }
  return out;
}

}  // namespace sqa
