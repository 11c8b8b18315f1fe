#include "anick/groebner_nc.hpp"

#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "anick/error.hpp"

namespace anick {

std::vector<Word> NcGB::leading_words() const {
  std::vector<Word> out;
  for (const auto& g : basis) out.push_back(g.lt());
  return out;
}

std::vector<std::pair<Word, Word>> find_subword(const Word& haystack, const Word& needle) {
  std::vector<std::pair<Word, Word>> out;
  if (needle.empty() || needle.size() > haystack.size()) return out;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + static_cast<std::ptrdiff_t>(i)))
      out.emplace_back(subword(haystack, 0, i), subword(haystack, i + needle.size()));
  return out;
}

std::optional<NcPoly> nc_reduce_once(const NcPoly& f, const NcPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("reduction with a zero polynomial");
  auto occ = find_subword(f.lt(), g.lt());
  if (occ.empty()) return std::nullopt;
  const auto& [m1, m2] = occ.front();
  return f - g.times(m1, m2) * Scalar(f.lc() / g.lc());
}

namespace {

WordAutomaton automaton_for(const RingPtr& ring, const std::vector<NcPoly>& basis) {
  std::vector<Word> lts;
  for (const auto& g : basis) lts.push_back(g.lt());
  return WordAutomaton(ring ? ring->size() : 0, lts);
}

}  // namespace

NcReducer::NcReducer(const NcGB& G) : NcReducer(G.ring, G.basis) {}

NcReducer::NcReducer(RingPtr ring, std::vector<NcPoly> basis)
    : ring_(std::move(ring)), basis_(std::move(basis)), automaton_(automaton_for(ring_, basis_)) {
  for (const auto& g : basis_)
    if (g.is_zero()) throw InputError("zero polynomial in a reducer basis");
}

NcPoly NcReducer::reduce(const Word& w) const { return reduce(NcPoly::monomial(ring_, w)); }

NcPoly NcReducer::reduce(const NcPoly& f) const {
  if (f.is_zero() || basis_.empty()) return f;
  const MonomialOrder& ord = ring_->order();
  std::map<Word, Scalar, Descending<Word>> work(Descending<Word>{&ord});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  std::vector<NcPoly::Term> result;
  while (!work.empty()) {
    auto it = work.begin();
    auto occ = automaton_.first_occurrence(it->first);
    if (!occ) {
      result.emplace_back(it->first, it->second);
      work.erase(it);
      continue;
    }
    Word m = it->first;
    Scalar c = it->second;
    work.erase(it);
    const NcPoly& g = basis_[occ->pattern];
    std::size_t len = g.lt().size();
    Scalar factor = c / g.lc();
    for (std::size_t k = 1; k < g.terms().size(); ++k) {
      const auto& [gw, gc] = g.terms()[k];
      Word key;
      key.reserve(m.size() - len + gw.size());
      key.insert(key.end(), m.begin(), m.begin() + static_cast<std::ptrdiff_t>(occ->start));
      key.insert(key.end(), gw.begin(), gw.end());
      key.insert(key.end(), m.begin() + static_cast<std::ptrdiff_t>(occ->start + len), m.end());
      auto [pos, fresh] = work.try_emplace(std::move(key), 0);
      pos->second -= factor * gc;
      if (pos->second == 0) work.erase(pos);
    }
  }
  return NcPoly::from_sorted(ring_, std::move(result));
}

NcPoly nc_normal_form(const NcPoly& f, const std::vector<NcPoly>& G) {
  if (f.is_zero() || G.empty()) return f;
  return NcReducer(f.ring(), G).reduce(f);
}

namespace {

using ObKey = std::tuple<int, std::size_t, std::size_t, std::size_t, int>;

ObKey key_of(const Obstruction& o) {
  return {o.ambiguity_degree, o.first, o.second, o.offset, o.kind == Obstruction::Kind::overlap ? 0 : 1};
}

// Obstructions between lt(f) = u (index i) and lt(g) = v (index j), f first.
void overlaps(const MonomialOrder& ord, const Word& u, std::size_t i, const Word& v, std::size_t j,
              std::vector<Obstruction>& out) {
  std::size_t lim = std::min(u.size(), v.size());
  for (std::size_t k = 1; k < lim; ++k) {
    if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), v.begin())) continue;
    Obstruction o;
    o.kind = Obstruction::Kind::overlap;
    o.left = subword(u, 0, u.size() - k);
    o.right = subword(v, k);
    o.first = i;
    o.second = j;
    o.ambiguity = concat(u, o.right);
    o.ambiguity_degree = ord.degree(o.ambiguity);
    o.offset = o.left.size();
    out.push_back(std::move(o));
  }
}

void inclusions(const MonomialOrder& ord, const Word& u, std::size_t i, const Word& v, std::size_t j,
                std::vector<Obstruction>& out) {
  if (v.size() > u.size() || u == v) return;
  for (auto& [m1, m2] : find_subword(u, v)) {
    Obstruction o;
    o.kind = Obstruction::Kind::inclusion;
    o.left = m1;
    o.right = m2;
    o.first = i;
    o.second = j;
    o.ambiguity = u;
    o.ambiguity_degree = ord.degree(u);
    o.offset = m1.size();
    out.push_back(std::move(o));
  }
}

NcPoly s_poly(const Obstruction& ob, const NcPoly& f, const NcPoly& g) {
  Scalar cf = 1 / f.lc(), cg = 1 / g.lc();
  if (ob.kind == Obstruction::Kind::overlap) return f.times({}, ob.right) * cf - g.times(ob.left, {}) * cg;
  return f * cf - g.times(ob.left, ob.right) * cg;
}

}  // namespace

std::vector<Obstruction> find_obstructions(const std::vector<NcPoly>& G) {
  std::vector<Obstruction> out;
  if (G.empty()) return out;
  const MonomialOrder& ord = G.front().ring()->order();
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) {
      overlaps(ord, G[i].lt(), i, G[j].lt(), j, out);
      if (i != j) inclusions(ord, G[i].lt(), i, G[j].lt(), j, out);
    }
  std::sort(out.begin(), out.end(), [](const Obstruction& a, const Obstruction& b) { return key_of(a) < key_of(b); });
  return out;
}

NcPoly nc_s_polynomial(const Obstruction& ob, const std::vector<NcPoly>& G) {
  if (ob.first >= G.size() || ob.second >= G.size()) throw InputError("stale obstruction: basis index out of range");
  const NcPoly& f = G[ob.first];
  const NcPoly& g = G[ob.second];
  if (f.is_zero() || g.is_zero()) throw InputError("stale obstruction: zero basis element");
  bool valid;
  if (ob.kind == Obstruction::Kind::overlap) {
    valid = !ob.left.empty() && !ob.right.empty() && ob.left.size() < f.lt().size() &&
            concat(f.lt(), ob.right) == concat(ob.left, g.lt());
  } else {
    valid = concat(ob.left, g.lt(), ob.right) == f.lt();
  }
  if (!valid) throw InputError("stale obstruction: leading words changed");
  return s_poly(ob, f, g);
}

NcGB nc_buchberger(const std::vector<NcPoly>& gens, const RingPtr& ring, int max_degree) {
  if (ring->kind() != AlgebraKind::noncommutative) throw InputError("noncommutative completion needs a noncommutative ring");
  const MonomialOrder& ord = ring->order();
  for (const auto& g : gens) {
    if (g.is_zero()) throw InputError("zero generator");
    if (!same_ring(g.ring(), ring)) throw InputError("presentation mismatch");
    if (g.degree() > max_degree)
      throw BoundError("relation of degree " + std::to_string(g.degree()) + " exceeds the degree bound " +
                       std::to_string(max_degree));
  }

  std::vector<NcPoly> elems;
  std::vector<bool> alive;
  std::set<ObKey> queue;
  std::map<ObKey, Obstruction> pending_obs;
  NcReducer reducer(ring, {});

  auto rebuild = [&]() {
    std::vector<NcPoly> live;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (alive[i]) live.push_back(elems[i]);
    reducer = NcReducer(ring, std::move(live));
  };

  std::deque<NcPoly> todo;
  auto absorb = [&]() {
    while (!todo.empty()) {
      NcPoly h = reducer.reduce(todo.front());
      todo.pop_front();
      if (h.is_zero()) continue;
      h = h.monic();
      std::size_t id = elems.size();
      // drop-and-reduce: elements whose leading word contains lt(h)
      for (std::size_t e = 0; e < id; ++e) {
        if (!alive[e]) continue;
        if (!find_subword(elems[e].lt(), h.lt()).empty()) {
          alive[e] = false;
          todo.push_back(elems[e]);
        }
      }
      elems.push_back(h);
      alive.push_back(true);
      rebuild();
      std::vector<Obstruction> obs;
      for (std::size_t j = 0; j <= id; ++j) {
        if (!alive[j]) continue;
        overlaps(ord, elems[id].lt(), id, elems[j].lt(), j, obs);
        if (j != id) overlaps(ord, elems[j].lt(), j, elems[id].lt(), id, obs);
      }
      for (auto& o : obs) {
        if (o.ambiguity_degree > max_degree) continue;
        ObKey k = key_of(o);
        queue.insert(k);
        pending_obs.emplace(k, std::move(o));
      }
    }
  };

  for (const auto& g : gens) todo.push_back(g);
  absorb();
  while (!queue.empty()) {
    ObKey k = *queue.begin();
    queue.erase(queue.begin());
    auto node = pending_obs.extract(k);
    const Obstruction& o = node.mapped();
    if (!alive[o.first] || !alive[o.second]) continue;
    todo.push_back(s_poly(o, elems[o.first], elems[o.second]));
    absorb();
  }

  NcGB out;
  out.ring = ring;
  out.order = ord;
  out.complete_to_degree = max_degree;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (alive[i]) out.basis.push_back(elems[i]);
  return out;
}

NcGB nc_reduce_basis(const NcGB& G) {
  std::vector<NcPoly> cur = G.basis;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::vector<NcPoly> others;
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (j != i) others.push_back(cur[j]);
      NcPoly r = nc_normal_form(cur[i], others);
      if (r.is_zero()) {
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      r = r.monic();
      if (!(r == cur[i])) {
        cur[i] = std::move(r);
        changed = true;
      }
    }
  }
  NcGB out = G;
  out.basis = std::move(cur);
  return out;
}

std::vector<std::vector<Word>> normal_words(const NcGB& G, int d) {
  if (d > G.complete_to_degree)
    throw BoundError("degree " + std::to_string(d) + " exceeds the certified degree " +
                     std::to_string(G.complete_to_degree));
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(std::max(d, 0)) + 1);
  NcReducer red(G);
  const WordAutomaton& a = red.automaton();
  const MonomialOrder& ord = G.ring->order();
  Word w;
  auto rec = [&](auto&& self, int state, int deg) -> void {
    out[static_cast<std::size_t>(deg)].push_back(w);
    for (Letter x : ord.precedence()) {
      int nd = deg + ord.weight(x);
      if (nd > d) continue;
      int ns = a.step(state, x);
      if (a.dead(ns)) continue;
      w.push_back(x);
      self(self, ns, nd);
      w.pop_back();
    }
  };
  rec(rec, a.root(), 0);
  // descending within each degree
  for (auto& level : out)
    std::sort(level.begin(), level.end(), [&](const Word& x, const Word& y) { return ord.compare(x, y) > 0; });
  return out;
}

std::vector<std::uint64_t> normal_word_counts(const NcGB& G, int d) {
  if (d > G.complete_to_degree)
    throw BoundError("degree " + std::to_string(d) + " exceeds the certified degree " +
                     std::to_string(G.complete_to_degree));
  NcReducer red(G);
  auto table = avoiding_counts(red.automaton(), G.ring->order().weights(), d);
  std::vector<std::uint64_t> out;
  for (int k = 0; k <= d; ++k) out.push_back(table[static_cast<std::size_t>(k)][0]);
  return out;
}

DiamondReport diamond_check(const NcGB& G) {
  DiamondReport rep;
  if (G.basis.empty()) return rep;
  NcReducer red(G);
  for (const auto& o : find_obstructions(G.basis)) {
    if (o.ambiguity_degree > G.complete_to_degree) continue;
    ++rep.checked;
    if (!red.reduce(nc_s_polynomial(o, G.basis)).is_zero()) rep.failures.push_back(o);
  }
  return rep;
}

}  // namespace anick
