#include "anick/groebner_comm.hpp"

#include <map>
#include <set>
#include <tuple>

#include "anick/error.hpp"

namespace anick {

std::optional<CommPoly> comm_reduce_once(const CommPoly& f, const CommPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("reduction with a zero polynomial");
  if (!g.lt().divides(f.lt())) return std::nullopt;
  CommMonomial m = quotient(f.lt(), g.lt());
  Scalar c = f.lc() / g.lc();
  return f - g.times(m, f.ring()->one()) * c;
}

CommPoly comm_normal_form(const CommPoly& f, const std::vector<CommPoly>& G) {
  if (f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  const MonomialOrder& ord = ring->order();
  std::map<CommMonomial, Scalar, Descending<CommMonomial>> work(Descending<CommMonomial>{&ord});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  std::vector<CommPoly::Term> result;
  while (!work.empty()) {
    auto it = work.begin();
    CommMonomial m = it->first;
    Scalar c = it->second;
    work.erase(it);
    const CommPoly* reducer = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && g.lt().divides(m)) {
        reducer = &g;
        break;
      }
    if (!reducer) {
      result.emplace_back(std::move(m), std::move(c));
      continue;
    }
    CommMonomial q = quotient(m, reducer->lt());
    Scalar factor = c / reducer->lc();
    for (std::size_t k = 1; k < reducer->terms().size(); ++k) {
      const auto& [gm, gc] = reducer->terms()[k];
      CommMonomial key = gm * q;
      auto [pos, fresh] = work.try_emplace(std::move(key), 0);
      pos->second -= factor * gc;
      if (pos->second == 0) work.erase(pos);
    }
  }
  return CommPoly::from_sorted(ring, std::move(result));
}

CommPoly comm_s_polynomial(const CommPoly& f, const CommPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of a zero polynomial");
  CommMonomial l = lcm(f.lt(), g.lt());
  CommMonomial one = f.ring()->one();
  CommPoly a = f.times(quotient(l, f.lt()), one) * Scalar(1 / f.lc());
  CommPoly b = g.times(quotient(l, g.lt()), one) * Scalar(1 / g.lc());
  return a - b;
}

CommGB comm_buchberger(const std::vector<CommPoly>& gens) {
  if (gens.empty()) return {};
  const RingPtr ring = gens.front().ring();
  const MonomialOrder& ord = ring->order();
  std::vector<CommPoly> G;
  for (const auto& g : gens) {
    if (g.is_zero()) throw InputError("zero generator");
    G.push_back(g);
  }
  // normal strategy: smallest lcm degree first, then pair index
  using Key = std::tuple<int, std::size_t, std::size_t>;
  std::set<Key> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      // coprime leading terms: the pair reduces to zero
      CommMonomial l = lcm(G[i].lt(), G[j].lt());
      if (l == G[i].lt() * G[j].lt()) continue;
      pairs.insert({ord.degree(l), i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);
  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    CommPoly h = comm_normal_form(comm_s_polynomial(G[i], G[j]), G);
    if (h.is_zero()) continue;
    G.push_back(std::move(h));
    add_pairs(G.size() - 1);
  }
  return CommGB{std::move(G), ord, false};
}

CommGB comm_reduce_basis(const CommGB& in) {
  std::vector<CommPoly> G;
  for (const auto& g : in.basis)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) return CommGB{{}, in.order, true};
  // drop elements whose leading monomial is divisible by another's (first wins on ties)
  std::vector<CommPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !G[j].lt().divides(G[i].lt())) continue;
      if (G[j].lt() != G[i].lt() || j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<CommPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CommPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // leading term is irreducible by the others, so NF keeps it
    reduced.push_back(comm_normal_form(minimal[i], others).monic());
  }
  const MonomialOrder& ord = in.order.precedence().empty() ? reduced.front().ring()->order() : in.order;
  std::sort(reduced.begin(), reduced.end(),
            [&](const CommPoly& a, const CommPoly& b) { return ord.compare(a.lt(), b.lt()) > 0; });
  return CommGB{std::move(reduced), ord, true};
}

std::vector<CommMonomial> standard_monomials(const RingPtr& ring, const std::vector<CommPoly>& G, int degree) {
  std::vector<CommMonomial> out;
  CommMonomial m = ring->one();
  std::size_t n = ring->size();
  // enumerate exponent vectors of the given weighted degree
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var == n) {
      if (left != 0) return;
      for (const auto& g : G)
        if (g.lt().divides(m)) return;
      out.push_back(m);
      return;
    }
    int w = ring->generators()[var].degree;
    for (int e = 0; e * w <= left; ++e) {
      m.exps[var] = e;
      self(self, var + 1, left - e * w);
    }
    m.exps[var] = 0;
  };
  rec(rec, 0, degree);
  const MonomialOrder& ord = ring->order();
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ord.compare(a, b) > 0; });
  return out;
}

}  // namespace anick
