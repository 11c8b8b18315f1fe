#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anick/order.hpp"
#include "anick/word.hpp"

namespace anick {

// Generators, algebra kind and order: the context every polynomial lives in.
class PolyRing {
 public:
  PolyRing(AlgebraKind kind, std::vector<Generator> gens, MonomialOrder order);

  // deglex in declaration order, all degrees taken from gens
  static std::shared_ptr<const PolyRing> make(AlgebraKind kind, std::vector<Generator> gens);

  AlgebraKind kind() const { return kind_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<Letter> find(std::string_view name) const;

  int degree(const Word& w) const { return order_.degree(w); }
  int degree(const CommMonomial& m) const { return order_.degree(m); }

  CommMonomial one() const { return CommMonomial{std::vector<int>(gens_.size(), 0)}; }
  CommMonomial variable(Letter x) const;

  std::string render(const Word& w) const;
  std::string render(const CommMonomial& m) const;

  bool operator==(const PolyRing& o) const {
    return kind_ == o.kind_ && gens_ == o.gens_ && order_ == o.order_;
  }

 private:
  AlgebraKind kind_;
  std::vector<Generator> gens_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace anick
