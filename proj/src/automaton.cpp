#include "anick/automaton.hpp"

#include <deque>

namespace anick {

WordAutomaton::WordAutomaton(std::size_t alphabet, const std::vector<Word>& patterns)
    : alphabet_(alphabet), patterns_(patterns) {
  std::vector<std::vector<int>> children(1, std::vector<int>(alphabet, -1));
  out_.assign(1, -1);
  depth_.assign(1, 0);
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    int s = 0;
    for (Letter x : patterns[p]) {
      if (children[s][x] < 0) {
        children[s][x] = static_cast<int>(children.size());
        children.emplace_back(alphabet, -1);
        out_.push_back(-1);
        depth_.push_back(depth_[s] + 1);
      }
      s = children[s][x];
    }
    if (out_[s] < 0) out_[s] = static_cast<int>(p);
  }
  std::size_t n = children.size();
  next_.assign(n * alphabet, 0);
  std::vector<int> fail(n, 0);
  dict_.assign(n, -1);
  std::deque<int> queue;
  for (std::size_t x = 0; x < alphabet; ++x) {
    int c = children[0][x];
    if (c >= 0) {
      next_[x] = c;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    int f = fail[s];
    dict_[s] = out_[f] >= 0 ? f : dict_[f];
    // longest pattern ending here: own pattern beats any proper suffix
    if (out_[s] < 0 && dict_[s] >= 0) out_[s] = out_[dict_[s]];
    for (std::size_t x = 0; x < alphabet; ++x) {
      int c = children[s][x];
      if (c >= 0) {
        fail[c] = next_[static_cast<std::size_t>(f) * alphabet + x];
        next_[static_cast<std::size_t>(s) * alphabet + x] = c;
        queue.push_back(c);
      } else {
        next_[static_cast<std::size_t>(s) * alphabet + x] = next_[static_cast<std::size_t>(f) * alphabet + x];
      }
    }
  }
}

std::optional<WordAutomaton::Occurrence> WordAutomaton::first_occurrence(const Word& w) const {
  if (patterns_.empty()) return std::nullopt;
  int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s = step(s, w[i]);
    if (out_[s] >= 0) {
      std::size_t p = static_cast<std::size_t>(out_[s]);
      return Occurrence{i + 1 - patterns_[p].size(), p};
    }
  }
  return std::nullopt;
}

std::vector<WordAutomaton::Occurrence> WordAutomaton::all_occurrences(const Word& w) const {
  std::vector<Occurrence> occ;
  if (patterns_.empty()) return occ;
  int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s = step(s, w[i]);
    // walk the dictionary chain: own pattern first, then shorter suffix patterns
    int t = s;
    if (out_[t] >= 0 && static_cast<int>(patterns_[out_[t]].size()) == depth_[t]) {
      occ.push_back({i + 1 - patterns_[out_[t]].size(), static_cast<std::size_t>(out_[t])});
    }
    for (t = dict_[t]; t >= 0; t = dict_[t]) {
      std::size_t p = static_cast<std::size_t>(out_[t]);
      if (static_cast<int>(patterns_[p].size()) == depth_[t]) occ.push_back({i + 1 - patterns_[p].size(), p});
    }
  }
  return occ;
}

}  // namespace anick

#include "anick/error.hpp"

namespace anick {

std::vector<std::vector<std::uint64_t>> avoiding_counts(const WordAutomaton& a, const std::vector<int>& weights,
                                                        int max_degree) {
  std::size_t n = a.states();
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(std::max(max_degree, 0)) + 1,
                                            std::vector<std::uint64_t>(n, 0));
  for (std::size_t s = 0; s < n; ++s) t[0][s] = 1;
  for (int k = 1; k <= max_degree; ++k) {
    for (std::size_t s = 0; s < n; ++s) {
      std::uint64_t sum = 0;
      for (std::size_t x = 0; x < a.alphabet(); ++x) {
        int w = weights[x];
        if (w > k) continue;
        int nx = a.step(static_cast<int>(s), static_cast<Letter>(x));
        if (a.dead(nx)) continue;
        if (__builtin_add_overflow(sum, t[static_cast<std::size_t>(k - w)][static_cast<std::size_t>(nx)], &sum))
          throw BoundError("normal word count exceeds 64-bit range at degree " + std::to_string(k));
      }
      t[static_cast<std::size_t>(k)][s] = sum;
    }
  }
  return t;
}

}  // namespace anick
