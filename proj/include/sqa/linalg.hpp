#pragma once

#include <map>
#include <vector>

#include "sqa/rational.hpp"

namespace sqa {

using SparseVec = std::map<int, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a x

// Row echelon form keyed by pivot = largest column of each row.
class Echelon {
 public:
  // Full reduction: on return no column of v is a pivot column.
  void reduce(SparseVec& v) const;
  bool insert(SparseVec v);
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return rows_.count(col) > 0; }
  bool in_span(SparseVec v) const;
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

int rank_of(const std::vector<SparseVec>& rows);

struct KernelResult {
  int rank = 0;
  std::vector<SparseVec> kernel;  // coordinates over the source index 0..images.size()-1
};

// Source basis vector k maps to images[k].
KernelResult kernel_of(const std::vector<SparseVec>& images);

}  // namespace sqa
