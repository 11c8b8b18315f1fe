#include <atomic>
#include <map>
#include <thread>

#include "anick/error.hpp"
#include "anick/linalg.hpp"
#include "anick/resolution.hpp"

namespace anick {

namespace {

struct Counts {
  std::vector<std::vector<std::uint64_t>> table;  // [k][state]
  const AnickResolution* res;

  std::uint64_t words(int k) const { return k < 0 ? 0 : table[static_cast<std::size_t>(k)][0]; }

  std::uint64_t dim(int n, int d) const {
    if (n == -1) return words(d);
    std::uint64_t s = 0;
    for (const auto& c : res->chains().level(n))
      if (c.degree <= d) s += words(d - c.degree);
    return s;
  }

  // number of (c, w) with tail(c) * w normal: the pivots of d_n in degree d
  std::uint64_t matched(int n, int d) const {
    if (n == -1) return d == 0 ? 1 : 0;
    const WordAutomaton& a = res->chains().automaton();
    std::uint64_t s = 0;
    for (const auto& c : res->chains().level(n)) {
      if (c.degree > d) continue;
      int st = a.run(c.tail);
      s += table[static_cast<std::size_t>(d - c.degree)][static_cast<std::size_t>(st)];
    }
    return s;
  }
};

struct EliminationResult {
  std::uint64_t rank = 0;
  bool dd_zero = true;
  std::string dd_witness;
};

// Enumerates normal words of one degree, on demand.
class NormalWordCache {
 public:
  explicit NormalWordCache(const AnickResolution& res) : res_(res) {}

  const std::vector<Word>& of_degree(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    std::vector<Word> out;
    const WordAutomaton& a = res_.chains().automaton();
    const MonomialOrder& ord = res_.order();
    Word w;
    auto rec = [&](auto&& self, int state, int deg) -> void {
      if (deg == k) {
        out.push_back(w);
        return;
      }
      for (Letter x : ord.precedence()) {
        int nd = deg + ord.weight(x);
        if (nd > k) continue;
        int ns = a.step(state, x);
        if (a.dead(ns)) continue;
        w.push_back(x);
        self(self, ns, nd);
        w.pop_back();
      }
    };
    rec(rec, a.root(), 0);
    return cache_.emplace(k, std::move(out)).first->second;
  }

 private:
  const AnickResolution& res_;
  std::mutex mu_;
  std::map<int, std::vector<Word>> cache_;
};

EliminationResult eliminate(const AnickResolution& res, NormalWordCache& words, int n, int d) {
  EliminationResult out;
  std::vector<ResElement> images;
  for (std::size_t i = 0; i < res.chains().size(n); ++i) {
    const Chain& c = res.chains().at(n, i);
    if (c.degree > d) continue;
    for (const Word& w : words.of_degree(d - c.degree)) images.push_back(res.times(res.differential(n, i), w));
  }
  std::map<Word, std::size_t, Descending<Word>> index(Descending<Word>{&res.order()});
  for (const auto& im : images)
    for (const auto& [key, t] : im.terms()) index.emplace(key, 0);
  std::size_t k = 0;
  for (auto& [key, v] : index) v = k++;
  RowEchelon ech;
  for (const auto& im : images) {
    SparseVec v;
    for (const auto& [key, t] : im.terms()) v.emplace_back(index.at(key), t.coeff);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.add(std::move(v));
    bool zero = n == 0 ? res.augmentation(im) == 0 : res.apply_d(im).is_zero();
    if (!zero && out.dd_zero) {
      out.dd_zero = false;
      out.dd_witness = res.render(im);
    }
  }
  out.rank = ech.rank();
  return out;
}

}  // namespace

VerificationReport verify_resolution(const AnickResolution& res, int max_level, int max_degree,
                                     const VerifyOptions& opts) {
  if (max_level > res.max_level() || max_degree > res.max_degree())
    throw BoundError("verification window exceeds the built resolution (level " + std::to_string(res.max_level()) +
                     ", degree " + std::to_string(res.max_degree()) + ")");
  VerificationReport rep;
  rep.kernel_checks = res.stats().kernel_checks;
  rep.kernel_failures = res.stats().kernel_failures;
  const ChainSet& cs = res.chains();

  // d o d on free generators; enough by right A-linearity
  for (int n = 0; n <= max_level; ++n) {
    for (std::size_t i = 0; i < cs.size(n); ++i) {
      const Chain& c = cs.at(n, i);
      if (c.degree > max_degree) continue;
      ++rep.dd_checked;
      const ResElement& d = res.differential(n, i);
      bool zero = n == 0 ? res.augmentation(d) == 0 : res.apply_d(d).is_zero();
      if (!zero) {
        rep.dd_zero = false;
        rep.dd_failures.push_back({n, c.degree, res.ring()->render(c.word)});
      }
    }
  }

  // unit leading term (parent (x) tail) on every chain of level >= 1
  for (int n = 1; n <= max_level; ++n) {
    for (std::size_t i = 0; i < cs.size(n); ++i) {
      const Chain& c = cs.at(n, i);
      const ResElement& d = res.differential(n, i);
      if (d.is_zero()) {
        rep.leading_certificate = false;
        continue;
      }
      const auto& [key, t] = *d.terms().begin();
      if (key != c.word || t.chain != static_cast<std::size_t>(c.parent) || t.coeff != 1)
        rep.leading_certificate = false;
    }
  }

  Counts counts{avoiding_counts(cs.automaton(), res.order().weights(), max_degree), &res};

  // which ranks can be eliminated explicitly
  struct Task {
    int n;
    int d;
  };
  std::vector<Task> tasks;
  std::map<std::pair<int, int>, std::size_t> task_of;
  auto small = [&](int n, int d) {
    std::uint64_t a = counts.dim(n, d), b = counts.dim(n + 1, d);
    return a + b <= opts.block_budget;
  };
  for (int d = 0; d <= max_degree; ++d)
    for (int n = -1; n < max_level; ++n) {
      if (counts.dim(n, d) == 0 || !small(n, d)) continue;
      for (int m : {n, n + 1})
        if (m >= 0 && !task_of.count({m, d})) {
          task_of[{m, d}] = tasks.size();
          tasks.push_back({m, d});
        }
    }
  std::vector<EliminationResult> results(tasks.size());
  NormalWordCache words(res);
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = eliminate(res, words, tasks[i].n, tasks[i].d);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  int threads = std::max(opts.threads, 1);
  if (threads == 1 || tasks.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!results[i].dd_zero) {
      rep.dd_zero = false;
      rep.dd_failures.push_back({tasks[i].n, tasks[i].d, results[i].dd_witness});
    }
    if (results[i].rank < counts.matched(tasks[i].n, tasks[i].d)) rep.leading_certificate = false;
  }

  auto rank = [&](int n, int d) -> std::uint64_t {
    if (n == -1) return d == 0 ? 1 : 0;
    return results[task_of.at({n, d})].rank;
  };
  for (int d = 0; d <= max_degree; ++d) {
    for (int n = -1; n < max_level; ++n) {
      BlockCheck b;
      b.level = n;
      b.degree = d;
      b.dim = counts.dim(n, d);
      if (b.dim == 0) continue;
      if (small(n, d)) {
        b.method = "elimination";
        b.rank_out = rank(n, d);
        b.rank_in = rank(n + 1, d);
        b.exact = b.dim - b.rank_out == b.rank_in;
        ++rep.eliminated_blocks;
      } else {
        b.method = "pivot";
        b.rank_out = counts.matched(n, d);
        b.rank_in = counts.matched(n + 1, d);
        b.exact = rep.leading_certificate && rep.dd_zero && b.rank_out + b.rank_in == b.dim;
        ++rep.pivot_blocks;
      }
      if (!b.exact) rep.exact = false;
      rep.blocks.push_back(b);
    }
  }
  return rep;
}

}  // namespace anick
