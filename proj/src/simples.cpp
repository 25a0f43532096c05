#include "sqa/simples.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "sqa/errors.hpp"
#include "sqa/linalg.hpp"
#include "sqa/ypq.hpp"

namespace sqa {

bool Representation::vanishes(int arrow) const {
  if (mode == RepMode::Exact) return exact.at(arrow - 1) == 0;
  return std::abs(value.at(arrow - 1)) <= 1e-12;
}

std::vector<int> Representation::support() const {
  std::vector<int> s;
  for (const auto& a : quiver.arrows)
    if (!vanishes(a.id)) s.push_back(a.id);
  return s;
}

namespace {

template <class T>
T evaluate(const Monomial4& m, const std::array<T, 4>& point) {
  T v = T(1);
  for (int k = 0; k < 4; ++k)
    for (int e = 0; e < m[k]; ++e) v = v * point[k];
  return v;
}

Representation base_rep(const Algebra& A, const Impression& tau, RepMode mode) {
  if (tau.label.size() != A.quiver.arrows.size()) throw InvalidQuiver("impression does not cover every arrow");
  Representation rep;
  rep.mode = mode;
  rep.quiver = A.quiver;
  rep.dims.assign(A.quiver.num_vertices, 1);
  return rep;
}

}  // namespace

Representation large_simple(const Algebra& A, const Impression& tau, const ExactPoint& point) {
  Representation rep = base_rep(A, tau, RepMode::Exact);
  for (const auto& m : tau.label) rep.exact.push_back(evaluate(m, point));
  rep.in_U = evaluate(kSigma, point) != 0;
  for (const auto& rel : relation_generators(A.quiver, A.W)) {
    Rational total = 0;
    for (const auto& [p, c] : rel.terms()) {
      Rational v = c;
      for (int a : p.arrows) v *= rep.exact[a - 1];
      total += v;
    }
    if (total != 0) throw RelationViolation(rel.to_string(A.quiver) + " evaluates to " + total.get_str());
  }
  return rep;
}

Representation large_simple(const Algebra& A, const Impression& tau, const ComplexPoint& point) {
  Representation rep = base_rep(A, tau, RepMode::Complex);
  for (const auto& m : tau.label) rep.value.push_back(evaluate(m, point));
  rep.in_U = std::abs(evaluate(kSigma, point)) > 1e-12;
  for (const auto& rel : relation_generators(A.quiver, A.W)) {
    std::complex<double> total = 0;
    double scale = 0;
    for (const auto& [p, c] : rel.terms()) {
      std::complex<double> v = c.get_d();
      for (int a : p.arrows) v *= rep.value[a - 1];
      total += v;
      scale += std::abs(v);
    }
    if (std::abs(total) > 1e-12 * std::max(1.0, scale))
      throw RelationViolation(rel.to_string(A.quiver) + " evaluates to " + std::to_string(std::abs(total)));
  }
  return rep;
}

Representation large_simple(const TorusQuiver& q, const ExactPoint& point) {
  return large_simple(square_algebra(q), build_tau(q), point);
}

Representation large_simple(const TorusQuiver& q, const ComplexPoint& point) {
  return large_simple(square_algebra(q), build_tau(q), point);
}

namespace {

using Entry = std::pair<int, int>;

template <class T>
using SparseMatrix = std::map<Entry, T>;

template <class T>
SparseMatrix<T> multiply(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  SparseMatrix<T> out;
  for (const auto& [ij, x] : a)
    for (auto it = b.lower_bound({ij.second, 0}); it != b.end() && it->first.first == ij.second; ++it)
      out[{ij.first, it->first.second}] += x * it->second;
  return out;
}

template <class T>
std::vector<SparseMatrix<T>> generators(const Representation& rep, const std::vector<T>& values) {
  std::vector<int> offset(rep.dims.size() + 1, 0);
  for (std::size_t v = 0; v < rep.dims.size(); ++v) offset[v + 1] = offset[v] + rep.dims[v];
  std::vector<SparseMatrix<T>> gens;
  for (std::size_t v = 0; v < rep.dims.size(); ++v) {
    SparseMatrix<T> e;
    for (int k = offset[v]; k < offset[v + 1]; ++k) e[{k, k}] = T(1);
    gens.push_back(std::move(e));
  }
  for (const auto& a : rep.quiver.arrows) {
    if (rep.vanishes(a.id)) continue;
    gens.push_back({{{offset[a.head - 1], offset[a.tail - 1]}, values[a.id - 1]}});
  }
  return gens;
}

bool exact_span_full(const Representation& rep, int N) {
  auto gens = generators<Rational>(rep, rep.exact);
  auto flat = [N](const SparseMatrix<Rational>& m) {
    SparseVec v;
    for (const auto& [ij, x] : m)
      if (x != 0) v[ij.first * N + ij.second] = x;
    return v;
  };
  Echelon span;
  std::vector<SparseMatrix<Rational>> basis;
  for (const auto& g : gens)
    if (span.insert(flat(g))) basis.push_back(g);
  for (std::size_t done = 0; done < basis.size();) {
    std::size_t end = basis.size();
    for (std::size_t b = done; b < end; ++b)
      for (const auto& g : gens) {
        auto prod = multiply(g, basis[b]);
        if (span.insert(flat(prod))) basis.push_back(std::move(prod));
      }
    done = end;
  }
  return span.rank() == N * N;
}

bool complex_span_full(const Representation& rep, int N) {
  auto gens = generators<std::complex<double>>(rep, rep.value);
  std::vector<Eigen::VectorXcd> ortho;
  std::vector<SparseMatrix<std::complex<double>>> basis;
  auto insert = [&](const SparseMatrix<std::complex<double>>& m) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N * N);
    for (const auto& [ij, x] : m) v(ij.first * N + ij.second) = x;
    double norm = v.norm();
    if (norm <= 1e-12) return false;
    v /= norm;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : ortho) v -= u.dot(v) * u;
    double rest = v.norm();
    if (rest <= 1e-9) return false;
    ortho.push_back(v / rest);
    return true;
  };
  for (const auto& g : gens)
    if (insert(g)) basis.push_back(g);
  for (std::size_t done = 0; done < basis.size();) {
    std::size_t end = basis.size();
    for (std::size_t b = done; b < end; ++b)
      for (const auto& g : gens) {
        auto prod = multiply(g, basis[b]);
        if (insert(prod)) basis.push_back(std::move(prod));
      }
    done = end;
  }
  return static_cast<int>(ortho.size()) == N * N;
}

}  // namespace

bool is_irreducible(const Representation& rep) {
  int N = 0;
  for (int d : rep.dims) N += d;
  if (N > 64) throw DimensionCap("total dimension " + std::to_string(N) + " exceeds 64");
  if (N == 0) return false;
  for (int d : rep.dims)
    if (d != 1) throw InvalidQuiver("arrow scalars need one-dimensional vertex spaces");
  return rep.mode == RepMode::Exact ? exact_span_full(rep, N) : complex_span_full(rep, N);
}

double moment_map(int p, int q, const ComplexPoint& z) {
  return 0.5 * (-p * std::norm(z[0]) - p * std::norm(z[1]) + (p + q) * std::norm(z[2]) + (p - q) * std::norm(z[3]));
}

ExactPoint random_lattice_point(std::mt19937_64& rng, double zero_probability) {
  std::bernoulli_distribution zero(zero_probability);
  std::uniform_int_distribution<int> pick(0, 9);
  ExactPoint pt;
  for (auto& c : pt) {
    if (zero(rng)) {
      c = 0;
    } else {
      int k = pick(rng) - 5;
      c = Rational(static_cast<long>(k >= 0 ? k + 1 : k));
    }
  }
  return pt;
}

ModuliScan moduli_scan(const TorusQuiver& quiver, int p, int q, double r, int samples, std::uint64_t seed) {
  if (p < 1 || q < 0 || q > p) throw InvalidPQ("need p >= 1 and 0 <= q <= p");
  if (samples < 1) throw InvalidQuiver("need at least one sample");
  const double coeff[4] = {-0.5 * p, -0.5 * p, 0.5 * (p + q), 0.5 * (p - q)};
  const double level = r > 0 ? 0.5 * r * r : -0.5 * r * r;
  // Free coordinates of the slice: those whose coefficient has the sign of the level.
  std::vector<int> free;
  if (r > 0) {
    for (int k : {2, 3})
      if (coeff[k] > 0) free.push_back(k);
  } else if (r < 0) {
    for (int k : {0, 1})
      if (coeff[k] < 0) free.push_back(k);
  } else if (coeff[2] <= 0 && coeff[3] <= 0) {
    throw EmptyLevelSet("no positive direction balances the x coordinates");
  }
  if (r != 0 && free.empty()) throw EmptyLevelSet("slice cannot reach level " + std::to_string(level));

  Algebra A = square_algebra(quiver);
  Impression tau = build_tau(quiver);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0, 2 * M_PI);
  std::uniform_real_distribution<double> split(0.1, 0.9);
  std::uniform_real_distribution<double> size(0.5, 2.0);
  auto polar = [&](double modulus) { return std::polar(modulus, phase(rng)); };

  ModuliScan scan;
  scan.p = p;
  scan.q = q;
  scan.r = r;
  scan.level = level;
  std::map<std::vector<int>, std::vector<ModuliSample>> groups;
  for (int s = 0; s < samples; ++s) {
    ComplexPoint z{};
    double target = level;
    if (r == 0) {
      z[0] = polar(size(rng));
      z[1] = polar(size(rng));
      target = -(coeff[0] * std::norm(z[0]) + coeff[1] * std::norm(z[1]));
      free.clear();
      for (int k : {2, 3})
        if (coeff[k] > 0) free.push_back(k);
    }
    // Slice coordinates outside the free set take a random nonzero value.
    const std::vector<int> slice = r > 0 ? std::vector<int>{2, 3} : r < 0 ? std::vector<int>{0, 1} : std::vector<int>{2, 3};
    for (int k : slice)
      if (std::find(free.begin(), free.end(), k) == free.end()) z[k] = polar(size(rng));
    double t = free.size() == 2 ? split(rng) : 1.0;
    for (std::size_t f = 0; f < free.size(); ++f) {
      double share = f == 0 ? t : 1.0 - t;
      z[free[f]] = polar(std::sqrt(share * target / coeff[free[f]]));
    }
    ModuliSample sample;
    sample.point = z;
    sample.mu = moment_map(p, q, z);
    Representation rep = large_simple(A, tau, z);
    sample.support = rep.support();
    sample.irreducible = is_irreducible(rep);
    groups[sample.support].push_back(sample);
  }
  for (auto& [support, list] : groups) scan.groups.push_back({support, std::move(list)});
  return scan;
}

ModuliScan moduli_scan(int p, int q, double r, int samples, std::uint64_t seed) {
  return moduli_scan(generate_ypq(p, q), p, q, r, samples, seed);
}

}  // namespace sqa
