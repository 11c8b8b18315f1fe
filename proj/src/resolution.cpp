#include "anick/resolution.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "anick/error.hpp"

namespace anick {

void ResElement::add(Word key, std::size_t chain, std::size_t chain_len, const Scalar& c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), ResTerm{chain, chain_len, c});
    return;
  }
  if (it->second.chain != chain || it->second.split != chain_len)
    throw InternalError("two chain/word pairs share the same underlying word");
  it->second.coeff += c;
  if (it->second.coeff == 0) terms_.erase(it);
}

void ResElement::add_scaled(const ResElement& o, const Scalar& c) {
  if (c == 0) return;
  for (const auto& [key, t] : o.terms_) add(key, t.chain, t.split, t.coeff * c);
}

ResElement ResElement::scaled(const Scalar& c) const {
  ResElement r(level_, terms_.key_comp().ord);
  r.add_scaled(*this, c);
  return r;
}

namespace {

NcGB gb_for(const Presentation& p, int max_degree) {
  if (p.kind() != AlgebraKind::noncommutative)
    throw InputError("the resolution is built for noncommutative presentations");
  p.require_homogeneous();
  return nc_reduce_basis(nc_buchberger(p.nc_relations, p.ring, std::max(max_degree, 1)));
}

}  // namespace

AnickResolution::AnickResolution(const Presentation& p, int max_level, int max_degree, int threads)
    : AnickResolution(gb_for(p, max_degree), max_level, max_degree, threads) {}

AnickResolution::AnickResolution(NcGB gb, int max_level, int max_degree, int threads)
    : gb_(std::move(gb)), max_level_(max_level), max_degree_(max_degree) {
  if (max_level < 0) throw InputError("max level must be >= 0");
  if (max_degree < 1) throw InputError("max degree must be >= 1");
  if (gb_.complete_to_degree < max_degree)
    throw BoundError("Groebner basis certified only to degree " + std::to_string(gb_.complete_to_degree) +
                     ", resolution needs " + std::to_string(max_degree));
  for (const auto& g : gb_.basis)
    if (!g.is_homogeneous()) throw InputError("resolution needs homogeneous relations: " + g.to_string());
  reducer_ = NcReducer(gb_);
  chains_ = ChainSet(gb_.ring, gb_.leading_words(), max_level, max_degree);
  build(std::max(threads, 1));
}

const std::vector<std::pair<Word, Scalar>>& AnickResolution::nf(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;
  }
  std::vector<std::pair<Word, Scalar>> v;
  if (reducer_.is_normal(w)) {
    v.emplace_back(w, 1);
  } else {
    NcPoly r = reducer_.reduce(w);
    v.assign(r.terms().begin(), r.terms().end());
  }
  std::lock_guard<std::mutex> lock(cache_mu_);
  return nf_cache_.emplace(w, std::move(v)).first->second;
}

const ResElement& AnickResolution::differential(int n, std::size_t chain) const {
  if (n < 0 || n > max_level_) throw BoundError("differential d_" + std::to_string(n) + " was not built");
  return diff_.at(static_cast<std::size_t>(n)).at(chain);
}

void AnickResolution::set_differential(int n, std::size_t chain, ResElement value) {
  if (n < 0 || n > max_level_) throw BoundError("differential d_" + std::to_string(n) + " was not built");
  diff_.at(static_cast<std::size_t>(n)).at(chain) = std::move(value);
}

ResElement AnickResolution::generator(int n, std::size_t chain, const Word& w) const {
  ResElement r = zero(n);
  const Word& cw = chains_.at(n, chain).word;
  r.add(concat(cw, w), chain, cw.size(), 1);
  return r;
}

ResElement AnickResolution::times(const ResElement& u, const Word& w) const {
  if (w.empty()) return u;
  ResElement r = zero(u.level());
  for (const auto& [key, t] : u.terms()) {
    Word v = concat(subword(key, t.split), w);
    for (const auto& [nw, c] : nf(v)) {
      Word k = subword(key, 0, t.split);
      k.insert(k.end(), nw.begin(), nw.end());
      r.add(std::move(k), t.chain, t.split, t.coeff * c);
    }
  }
  return r;
}

ResElement AnickResolution::apply_d(const ResElement& u) const {
  int n = u.level();
  if (n < 0) throw InputError("apply the augmentation to level -1 elements");
  ResElement r = zero(n - 1);
  for (const auto& [key, t] : u.terms()) {
    Word v = subword(key, t.split);
    const ResElement& d = differential(n, t.chain);
    for (const auto& [dkey, dt] : d.terms()) {
      Word tail = concat(subword(dkey, dt.split), v);
      for (const auto& [nw, c] : nf(tail)) {
        Word k = subword(dkey, 0, dt.split);
        k.insert(k.end(), nw.begin(), nw.end());
        r.add(std::move(k), dt.chain, dt.split, t.coeff * dt.coeff * c);
      }
    }
  }
  return r;
}

Scalar AnickResolution::augmentation(const ResElement& u) const {
  if (u.level() != -1) throw InputError("the augmentation acts on level -1");
  auto it = u.terms().find(Word{});
  return it == u.terms().end() ? Scalar(0) : it->second.coeff;
}

ResElement AnickResolution::split(int n, const ResElement& u, KernelStats* stats) const {
  if (u.level() != n - 1) throw InputError("i_n expects an element of level n - 1");
  ResElement result = zero(n);
  if (n == 0) {
    for (const auto& [key, t] : u.terms()) {
      if (key.empty()) throw InputError("element has a constant term; it is not in the kernel of the augmentation");
      auto x = chains_.find(0, Word{key[0]});
      if (!x) throw BoundError("generator " + ring()->render(Word{key[0]}) + " lies beyond the degree bound");
      result.add(key, *x, 1, t.coeff);
    }
    return result;
  }
  if (n > max_level_) throw BoundError("splitting map i_" + std::to_string(n) + " needs level " + std::to_string(n));
  const WordAutomaton& a = chains_.automaton();
  ResElement work = u;
  while (!work.is_zero()) {
    auto it = work.terms().begin();
    Word key = it->first;
    ResTerm t = it->second;
    const Chain& f = chains_.at(n - 1, t.chain);
    int state = a.run(f.tail);
    std::size_t k = 0;
    bool found = false;
    for (std::size_t i = t.split; i < key.size(); ++i) {
      state = a.step(state, key[i]);
      if (a.dead(state)) {
        k = i + 1;
        found = true;
        break;
      }
    }
    if (!found)
      throw InternalError("leading pair " + render_pair(n - 1, key, t) + " admits no chain factorization");
    Word g_word = subword(key, 0, k);
    auto g = chains_.find(n, g_word);
    if (!g) {
      if (order().degree(g_word) > max_degree_)
        throw BoundError("chain " + ring()->render(g_word) + " exceeds the degree bound");
      throw InternalError("chain " + ring()->render(g_word) + " missing from the enumeration");
    }
    Word c = subword(key, k);
    result.add(key, *g, k, t.coeff);
    work.add_scaled(times(differential(n, *g), c), -t.coeff);
    if (stats) ++stats->descent_steps;
    if (!work.is_zero() && order().compare(work.terms().begin()->first, key) >= 0)
      throw InternalError("splitting recursion failed to descend at " + render_pair(n - 1, key, t));
  }
  return result;
}

ResElement AnickResolution::compute_differential(int n, std::size_t chain, KernelStats& stats) const {
  if (n == 0) {
    ResElement r = zero(-1);
    for (const auto& [w, c] : nf(chains_.at(0, chain).word)) r.add(w, 0, 0, c);
    return r;
  }
  const Chain& c = chains_.at(n, chain);
  std::size_t g = static_cast<std::size_t>(c.parent);
  ResElement x = generator(n - 1, g, c.tail);
  ResElement y = times(differential(n - 1, g), c.tail);
  ResElement z = split(n - 1, y, &stats);
  ++stats.kernel_checks;
  if (!(apply_d(z) == y)) ++stats.kernel_failures;
  x.add_scaled(z, -1);
  return x;
}

void AnickResolution::build(int threads) {
  diff_.assign(static_cast<std::size_t>(max_level_) + 1, {});
  for (int n = 0; n <= max_level_; ++n) {
    std::size_t count = chains_.size(n);
    auto& out = diff_[static_cast<std::size_t>(n)];
    out.assign(count, zero(n - 1));
    std::vector<KernelStats> local(static_cast<std::size_t>(threads));
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&](std::size_t tid) {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          out[i] = compute_differential(n, i, local[tid]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    if (threads <= 1 || count < 2) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
      for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (const auto& s : local) {
      stats_.kernel_checks += s.kernel_checks;
      stats_.kernel_failures += s.kernel_failures;
      stats_.descent_steps += s.descent_steps;
    }
  }
}

std::string AnickResolution::render_pair(int level, const Word& key, const ResTerm& t) const {
  (void)level;
  return ring()->render(subword(key, 0, t.split)) + " ⊗ " + ring()->render(subword(key, t.split));
}

std::string AnickResolution::render(const ResElement& u) const {
  if (u.is_zero()) return "0";
  std::string s;
  for (const auto& [key, t] : u.terms()) {
    bool neg = t.coeff < 0;
    Scalar a = neg ? Scalar(-t.coeff) : t.coeff;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (a != 1) s += to_string(a) + "*";
    s += render_pair(u.level(), key, t);
  }
  return s;
}

ResElement d0(const AnickResolution& res, Letter x) {
  auto idx = res.chains().find(0, Word{x});
  if (idx) return res.differential(0, *idx);
  ResElement r = res.zero(-1);
  for (const auto& [w, c] : res.nf(Word{x})) r.add(w, 0, 0, c);
  return r;
}

ResElement i0(const AnickResolution& res, const ResElement& u) { return res.split(0, u); }

ResElement dn(const AnickResolution& res, int n, std::size_t chain) { return res.differential(n, chain); }

ResElement in_split(const AnickResolution& res, int n, const ResElement& u) {
  if (n >= 1 && u.level() >= 0 && !res.apply_d(u).is_zero())
    throw InputError("i_n needs a cycle: d(u) != 0");
  return res.split(n, u);
}

std::vector<GradedMatrix> differential_matrices(const AnickResolution& res) {
  std::vector<GradedMatrix> out;
  GradedMatrix eps;
  eps.level = -1;
  eps.degree = 0;
  eps.rows = {"1"};
  eps.cols = {"1"};
  eps.entries.emplace_back(0, 0, Scalar(1));
  out.push_back(std::move(eps));
  const ChainSet& cs = res.chains();
  for (int n = 0; n <= res.max_level(); ++n) {
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < cs.size(n); ++i) by_degree[cs.at(n, i).degree].push_back(i);
    for (const auto& [deg, rows] : by_degree) {
      GradedMatrix m;
      m.level = n;
      m.degree = deg;
      std::map<Word, std::pair<std::size_t, std::size_t>, Descending<Word>> cols(Descending<Word>{&res.order()});
      for (std::size_t r : rows)
        for (const auto& [key, t] : res.differential(n, r).terms()) cols.emplace(key, std::make_pair(t.chain, t.split));
      std::map<Word, std::size_t, Descending<Word>> col_index(Descending<Word>{&res.order()});
      for (const auto& [key, ct] : cols) {
        col_index.emplace(key, m.cols.size());
        m.cols.push_back(res.render_pair(n - 1, key, ResTerm{ct.first, ct.second, 0}));
      }
      for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        m.rows.push_back(res.ring()->render(cs.at(n, rows[ri]).word));
        for (const auto& [key, t] : res.differential(n, rows[ri]).terms())
          m.entries.emplace_back(ri, col_index.at(key), t.coeff);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<GradedMatrix> build_resolution(const Presentation& p, int max_level, int max_degree, int threads) {
  AnickResolution res(p, max_level, max_degree, threads);
  return differential_matrices(res);
}

}  // namespace anick
