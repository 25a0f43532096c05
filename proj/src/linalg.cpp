#include "sqa/linalg.hpp"

namespace sqa {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [c, v] : x) {
    auto it = y.find(c);
    if (it == y.end()) {
      y.emplace(c, a * v);
    } else {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

void Echelon::reduce(SparseVec& v) const {
  if (rows_.empty()) return;
  auto it = v.end();
  while (it != v.begin()) {
    --it;
    auto row = rows_.find(it->first);
    if (row == rows_.end()) continue;
    int col = it->first;
    Rational coef = -it->second;
    axpy(v, coef, row->second);
    it = v.lower_bound(col);
  }
}

bool Echelon::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  auto lead = std::prev(v.end());
  int col = lead->first;
  Rational inv = 1 / lead->second;
  for (auto& [c, x] : v) x *= inv;
  rows_.emplace(col, std::move(v));
  return true;
}

bool Echelon::in_span(SparseVec v) const {
  reduce(v);
  return v.empty();
}

int rank_of(const std::vector<SparseVec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

KernelResult kernel_of(const std::vector<SparseVec>& images) {
  const int s = static_cast<int>(images.size());
  Echelon e;
  KernelResult out;
  for (int k = 0; k < s; ++k) {
    SparseVec v;
    for (const auto& [c, x] : images[k]) v.emplace(c + s, x);
    v.emplace(k, Rational(1));
    e.reduce(v);
    if (v.empty()) continue;
    int lead = std::prev(v.end())->first;
    if (lead >= s) {
      ++out.rank;
    } else {
      out.kernel.push_back(v);
    }
    e.insert(std::move(v));
  }
  return out;
}

}  // namespace sqa
