#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "anick/scalar.hpp"

namespace anick {

// Sparse vector: (index, value) sorted by index, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

// Incremental exact Gaussian elimination over Q.
class RowEchelon {
 public:
  // Returns true if v was independent of what has been added so far.
  bool add(SparseVec v);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseVec> pivots_;  // leading index -> vector with leading entry 1
};

std::size_t rank_of(const std::vector<SparseVec>& vectors);

// a - c * b
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);

}  // namespace anick
