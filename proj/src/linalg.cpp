#include "anick/linalg.hpp"

namespace anick {

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second - c * b[j].second;
      if (v != 0) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

bool RowEchelon::add(SparseVec v) {
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) {
      Scalar inv = 1 / v.front().second;
      for (auto& e : v) e.second *= inv;
      std::size_t lead = v.front().first;
      pivots_.emplace(lead, std::move(v));
      return true;
    }
    Scalar c = v.front().second;
    v = axpy(v, c, it->second);
  }
  return false;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
  RowEchelon e;
  for (const auto& v : vectors) e.add(v);
  return e.rank();
}

}  // namespace anick
