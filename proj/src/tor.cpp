#include <map>

#include "anick/error.hpp"
#include "anick/linalg.hpp"
#include "anick/resolution.hpp"

namespace anick {

std::vector<ScalarMatrix> tensor_with_k(const AnickResolution& res) {
  std::vector<ScalarMatrix> out;
  const ChainSet& cs = res.chains();
  for (int n = 0; n <= res.max_level(); ++n) {
    std::map<int, std::vector<std::size_t>> rows, cols;
    for (std::size_t i = 0; i < cs.size(n); ++i) rows[cs.at(n, i).degree].push_back(i);
    for (std::size_t j = 0; j < cs.size(n - 1); ++j) cols[cs.at(n - 1, j).degree].push_back(j);
    for (const auto& [deg, r] : rows) {
      ScalarMatrix m;
      m.level = n;
      m.degree = deg;
      std::map<std::size_t, std::size_t> col_pos;
      for (std::size_t j : cols[deg]) {
        col_pos[j] = m.cols.size();
        m.cols.push_back(res.ring()->render(cs.at(n - 1, j).word));
      }
      for (std::size_t ri = 0; ri < r.size(); ++ri) {
        m.rows.push_back(res.ring()->render(cs.at(n, r[ri]).word));
        std::vector<std::tuple<std::size_t, std::size_t, Scalar>> row;
        for (const auto& [key, t] : res.differential(n, r[ri]).terms())
          if (key.size() == t.split) row.emplace_back(ri, col_pos.at(t.chain), t.coeff);
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return std::get<1>(a) < std::get<1>(b); });
        m.entries.insert(m.entries.end(), row.begin(), row.end());
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::uint64_t TorTable::total(int level) const {
  std::uint64_t s = 0;
  for (const auto& [key, v] : dims)
    if (key.first == level) s += v;
  return s;
}

TorTable tor_dimensions(const AnickResolution& res, int max_level, int max_degree) {
  if (res.max_level() < max_level + 1)
    throw BoundError("Tor at level " + std::to_string(max_level) + " needs the resolution built to level " +
                     std::to_string(max_level + 1));
  if (max_degree > res.max_degree())
    throw BoundError("Tor requested beyond the built degree " + std::to_string(res.max_degree()));
  std::map<std::pair<int, int>, std::uint64_t> rank;
  for (const auto& m : tensor_with_k(res)) {
    std::vector<SparseVec> rows(m.rows.size());
    for (const auto& [r, c, v] : m.entries) rows[r].emplace_back(c, v);
    rank[{m.level, m.degree}] = rank_of(rows);
  }
  auto rk = [&](int n, int d) -> std::uint64_t {
    auto it = rank.find({n, d});
    return it == rank.end() ? 0 : it->second;
  };
  TorTable t;
  t.max_level = max_level;
  t.max_degree = max_degree;
  const ChainSet& cs = res.chains();
  for (int n = -1; n <= max_level; ++n) {
    std::map<int, std::uint64_t> per_degree;
    for (const auto& c : cs.level(n))
      if (c.degree <= max_degree) ++per_degree[c.degree];
    for (const auto& [d, count] : per_degree) t.dims[{n, d}] = count - rk(n, d) - rk(n + 1, d);
  }
  return t;
}

MinimalityReport is_minimal(const AnickResolution& res) {
  MinimalityReport rep;
  for (const auto& m : tensor_with_k(res)) {
    if (m.entries.empty()) continue;
    const auto& [r, c, v] = m.entries.front();
    rep.minimal = false;
    rep.witness = MinimalityWitness{m.level, m.rows[r], m.cols[c], v};
    break;
  }
  return rep;
}

}  // namespace anick
