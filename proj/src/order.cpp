#include "anick/order.hpp"

#include <algorithm>

#include "anick/error.hpp"

namespace anick {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<Letter> precedence, std::vector<int> weights)
    : kind_(kind), precedence_(std::move(precedence)), weights_(std::move(weights)) {
  if (precedence_.size() != weights_.size()) throw InputError("order must rank every generator exactly once");
  rank_.assign(weights_.size(), -1);
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    Letter x = precedence_[i];
    if (x >= rank_.size() || rank_[x] != -1) throw InputError("order must rank every generator exactly once");
    rank_[x] = static_cast<int>(i);
  }
  for (int w : weights_)
    if (w < 1) throw InputError("generator degrees must be positive");
}

int MonomialOrder::degree(const Word& w) const {
  int d = 0;
  for (Letter x : w) d += weights_[x];
  return d;
}

int MonomialOrder::degree(const CommMonomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) d += weights_[i] * m.exps[i];
  return d;
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (kind_ == OrderKind::lex) throw InputError("lex is not a well-order on words; use deglex");
  if (a.size() == b.size() && a == b) return std::strong_ordering::equal;
  int da = degree(a), db = degree(b);
  if (da != db) return da <=> db;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return rank_[b[i]] <=> rank_[a[i]];
  return a.size() <=> b.size();
}

std::strong_ordering MonomialOrder::compare(const CommMonomial& a, const CommMonomial& b) const {
  if (kind_ == OrderKind::deglex) {
    int da = degree(a), db = degree(b);
    if (da != db) return da <=> db;
  }
  for (Letter x : precedence_)
    if (a.exps[x] != b.exps[x]) return a.exps[x] <=> b.exps[x];
  return std::strong_ordering::equal;
}

}  // namespace anick
