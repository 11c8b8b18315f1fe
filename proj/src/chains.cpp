#include "anick/chains.hpp"

#include <algorithm>
#include <set>

#include "anick/error.hpp"

namespace anick {

namespace {

void check_antichain(const std::vector<Word>& F) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].empty()) throw InputError("empty obstruction word");
    for (std::size_t j = 0; j < F.size(); ++j) {
      if (i == j || F[j].size() > F[i].size()) continue;
      if (std::search(F[i].begin(), F[i].end(), F[j].begin(), F[j].end()) != F[i].end())
        throw InputError("obstruction set is not an antichain");
    }
  }
}

std::size_t count_occurrences(const WordAutomaton& a, const Word& w) { return a.all_occurrences(w).size(); }

}  // namespace

ChainSet::ChainSet(RingPtr ring, std::vector<Word> obstructions, int max_level, int max_degree)
    : ring_(std::move(ring)),
      obstructions_(std::move(obstructions)),
      max_level_(max_level),
      max_degree_(max_degree) {
  check_antichain(obstructions_);
  for (const auto& u : obstructions_)
    if (u.size() == 1)
      throw InputError("obstruction '" + ring_->render(u) + "' is a single generator; drop it from the presentation");
  automaton_ = WordAutomaton(ring_->size(), obstructions_);
  const MonomialOrder& ord = ring_->order();
  levels_.assign(static_cast<std::size_t>(std::max(max_level, -1) + 2), {});
  index_.assign(levels_.size(), {});
  levels_[0].push_back(Chain{{}, {}, -1, -1, 0});
  index_[0].emplace(Word{}, 0);
  if (max_level < 0) return;
  for (std::size_t x = 0; x < ring_->size(); ++x) {
    Word w{static_cast<Letter>(x)};
    int d = ord.degree(w);
    if (d > max_degree) continue;
    index_[1].emplace(w, levels_[1].size());
    levels_[1].push_back(Chain{w, w, 0, 0, d});
  }
  for (int n = 1; n <= max_level; ++n) {
    const auto& prev = levels_[static_cast<std::size_t>(n)];
    auto& cur = levels_[static_cast<std::size_t>(n + 1)];
    auto& idx = index_[static_cast<std::size_t>(n + 1)];
    for (std::size_t p = 0; p < prev.size(); ++p) {
      const Chain& c = prev[p];
      const Word& r = c.tail;
      std::vector<Word> tails;
      for (const Word& u : obstructions_) {
        for (std::size_t s = 0; s < r.size(); ++s) {
          std::size_t ov = r.size() - s;
          if (ov >= u.size()) continue;
          if (!std::equal(r.begin() + static_cast<std::ptrdiff_t>(s), r.end(), u.begin())) continue;
          Word t = subword(u, ov);
          if (c.degree + ord.degree(t) > max_degree) continue;
          if (count_occurrences(automaton_, concat(r, t)) != 1) continue;
          tails.push_back(std::move(t));
        }
      }
      std::sort(tails.begin(), tails.end(), [&](const Word& a, const Word& b) { return ord.compare(a, b) < 0; });
      for (auto& t : tails) {
        Word w = concat(c.word, t);
        if (!idx.emplace(w, cur.size()).second)
          throw InternalError("chain " + ring_->render(w) + " has two decompositions");
        int d = c.degree + ord.degree(t);
        cur.push_back(Chain{std::move(w), std::move(t), n, static_cast<std::ptrdiff_t>(p), d});
      }
    }
  }
}

std::optional<std::size_t> ChainSet::find(int n, const Word& w) const {
  if (n < -1 || n > max_level_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(n + 1)];
  auto it = idx.find(w);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<std::uint64_t>> ChainSet::counts() const {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& lv : levels_) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(max_degree_) + 1, 0);
    for (const auto& c : lv) ++row[static_cast<std::size_t>(c.degree)];
    out.push_back(std::move(row));
  }
  return out;
}

ChainSet enumerate_chains(const RingPtr& ring, const std::vector<Word>& F, int max_level, int max_degree) {
  return ChainSet(ring, F, max_level, max_degree);
}

std::map<int, std::vector<std::uint64_t>> chain_counts(const ChainSet& cs) {
  std::map<int, std::vector<std::uint64_t>> out;
  auto rows = cs.counts();
  for (std::size_t i = 0; i < rows.size(); ++i) out[static_cast<int>(i) - 1] = rows[i];
  return out;
}

std::optional<std::vector<Word>> is_chain(const Word& word, const std::vector<Word>& F, int level) {
  check_antichain(F);
  if (level < -1) return std::nullopt;
  if (level == -1) {
    if (word.empty()) return std::vector<Word>{};
    return std::nullopt;
  }
  if (word.empty()) return std::nullopt;
  if (level == 0) {
    if (word.size() == 1) return std::vector<Word>{word};
    return std::nullopt;
  }
  std::size_t alphabet = 0;
  for (Letter x : word) alphabet = std::max<std::size_t>(alphabet, x + 1u);
  for (const auto& u : F)
    for (Letter x : u) alphabet = std::max<std::size_t>(alphabet, x + 1u);
  WordAutomaton a(alphabet, F);
  auto occ = a.all_occurrences(word);
  std::vector<Word> tails{Word{word[0]}};
  std::size_t r_start = 0, end = 1;
  for (int k = 1; k <= level; ++k) {
    std::size_t best_end = word.size() + 1, best_start = 0;
    for (const auto& o : occ) {
      std::size_t e = o.start + F[o.pattern].size();
      if (o.start >= r_start && e > end && e < best_end) {
        best_end = e;
        best_start = o.start;
      }
    }
    if (best_end > word.size() || best_start >= end) return std::nullopt;
    std::size_t inside = 0;
    for (const auto& o : occ)
      if (o.start >= r_start && o.start + F[o.pattern].size() <= best_end) ++inside;
    if (inside != 1) return std::nullopt;
    tails.push_back(subword(word, end, best_end - end));
    r_start = end;
    end = best_end;
  }
  if (end != word.size()) return std::nullopt;
  return tails;
}

}  // namespace anick
