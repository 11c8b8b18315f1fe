#pragma once

#include <compare>
#include <vector>

#include "anick/word.hpp"

namespace anick {

enum class OrderKind { deglex, lex };
enum class AlgebraKind { commutative, noncommutative };

// Weighted degree first (deglex only), then letters compared by precedence.
// precedence[0] is the largest generator.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<Letter> precedence, std::vector<int> weights);

  OrderKind kind() const { return kind_; }
  const std::vector<Letter>& precedence() const { return precedence_; }
  const std::vector<int>& weights() const { return weights_; }
  int rank(Letter x) const { return rank_[x]; }
  int weight(Letter x) const { return weights_[x]; }

  int degree(const Word& w) const;
  int degree(const CommMonomial& m) const;

  std::strong_ordering compare(const Word& a, const Word& b) const;
  std::strong_ordering compare(const CommMonomial& a, const CommMonomial& b) const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && precedence_ == o.precedence_ && weights_ == o.weights_;
  }

 private:
  OrderKind kind_ = OrderKind::deglex;
  std::vector<Letter> precedence_;
  std::vector<int> rank_;
  std::vector<int> weights_;
};

inline std::strong_ordering compare(const Word& a, const Word& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}
inline std::strong_ordering compare(const CommMonomial& a, const CommMonomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

// Strict "greater" comparator, for containers kept in descending order.
template <class M>
struct Descending {
  const MonomialOrder* ord;
  bool operator()(const M& a, const M& b) const { return ord->compare(a, b) > 0; }
};

}  // namespace anick
