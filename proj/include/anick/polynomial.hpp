#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "anick/error.hpp"
#include "anick/ring.hpp"
#include "anick/scalar.hpp"

namespace anick {

namespace detail {
inline Word mono_mul(const Word& a, const Word& b) { return concat(a, b); }
inline CommMonomial mono_mul(const CommMonomial& a, const CommMonomial& b) { return a * b; }
inline Word mono_one(const RingPtr&, const Word*) { return {}; }
inline CommMonomial mono_one(const RingPtr& r, const CommMonomial*) { return r->one(); }
}  // namespace detail

// Terms sorted descending under the ring's order, coefficients nonzero.
template <class M>
class Polynomial {
 public:
  using Monomial = M;
  using Term = std::pair<M, Scalar>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial monomial(RingPtr ring, M m, Scalar c = 1) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }
  static Polynomial constant(RingPtr ring, Scalar c) {
    M one = detail::mono_one(ring, static_cast<const M*>(nullptr));
    return monomial(std::move(ring), std::move(one), std::move(c));
  }
  // Already sorted, merged and nonzero: skips normalization.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading() const {
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    return terms_.front();
  }
  const M& lt() const { return leading().first; }
  const Scalar& lc() const { return leading().second; }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, ring_->degree(m));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& [m, c] : terms_)
      if (ring_->degree(m) != ring_->degree(terms_.front().first)) return false;
    return true;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Scalar inv = 1 / lc();
    return *this * inv;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  Polynomial operator*(const Scalar& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  Polynomial operator+(const Polynomial& o) const { return combine(o, 1); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, -1); }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& [a, x] : terms_)
      for (const auto& [b, y] : o.terms_) out.emplace_back(detail::mono_mul(a, b), x * y);
    return Polynomial(ring_, std::move(out));
  }

  // left * p * right; order-preserving since orders are multiplicative
  Polynomial times(const M& left, const M& right) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(detail::mono_mul(detail::mono_mul(left, m), right), c);
    return r;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool neg = c < 0;
      Scalar a = neg ? Scalar(-c) : c;
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      std::string mono = ring_->render(m);
      if (mono == "1") {
        s += anick::to_string(a);
      } else if (a == 1) {
        s += mono;
      } else {
        s += anick::to_string(a) + "*" + mono;
      }
    }
    return s;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw InputError("presentation mismatch");
  }

  Polynomial combine(const Polynomial& o, int sign) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return sign > 0 ? o : -o;
    check_ring(o);
    const MonomialOrder& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && ord.compare(terms_[i].first, o.terms_[j].first) > 0)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || ord.compare(terms_[i].first, o.terms_[j].first) < 0) {
        r.terms_.emplace_back(o.terms_[j].first, sign > 0 ? o.terms_[j].second : Scalar(-o.terms_[j].second));
        ++j;
      } else {
        Scalar c = sign > 0 ? Scalar(terms_[i].second + o.terms_[j].second) : Scalar(terms_[i].second - o.terms_[j].second);
        if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    if (!ring_) throw InputError("polynomial without a ring");
    const MonomialOrder& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.first, b.first) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        if (!merged.empty() && merged.back().second == 0) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && merged.back().second == 0) merged.pop_back();
    terms_ = std::move(merged);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

using NcPoly = Polynomial<Word>;
using CommPoly = Polynomial<CommMonomial>;

template <class M>
Polynomial<M> mul(const Polynomial<M>& p, const Polynomial<M>& q) {
  return p * q;
}

// Leading term under an arbitrary order, not necessarily the ring's own.
template <class M>
std::pair<M, Scalar> leading(const Polynomial<M>& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw InputError("leading term of the zero polynomial");
  const auto* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (ord.compare(t.first, best->first) > 0) best = &t;
  return *best;
}

}  // namespace anick
