#pragma once

#include <optional>
#include <vector>

#include "anick/word.hpp"

namespace anick {

// Aho-Corasick automaton over a finite set of words.
// Used to find obstruction occurrences and to walk normal words.
class WordAutomaton {
 public:
  struct Occurrence {
    std::size_t start;
    std::size_t pattern;
  };

  WordAutomaton() = default;
  WordAutomaton(std::size_t alphabet, const std::vector<Word>& patterns);

  int root() const { return 0; }
  int step(int state, Letter x) const { return next_[static_cast<std::size_t>(state) * alphabet_ + x]; }
  // pattern that is a suffix of the state's string (longest), or -1
  int match(int state) const { return out_[state]; }
  bool dead(int state) const { return out_[state] >= 0; }
  std::size_t states() const { return out_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  const std::vector<Word>& patterns() const { return patterns_; }

  int run(const Word& w, int state = 0) const {
    for (Letter x : w) state = step(state, x);
    return state;
  }

  // The occurrence that is completed first when scanning left to right.
  std::optional<Occurrence> first_occurrence(const Word& w) const;
  std::vector<Occurrence> all_occurrences(const Word& w) const;
  bool is_normal(const Word& w) const { return !first_occurrence(w); }

 private:
  std::size_t alphabet_ = 0;
  std::vector<Word> patterns_;
  std::vector<int> next_;
  std::vector<int> out_;
  std::vector<int> depth_;
  std::vector<int> dict_;  // next state on the suffix chain that ends a pattern
};

}  // namespace anick

namespace anick {

// table[k][s] = number of words of weighted degree k that can be read from
// state s without ever completing a pattern. Throws BoundError on overflow.
std::vector<std::vector<std::uint64_t>> avoiding_counts(const WordAutomaton& a, const std::vector<int>& weights,
                                                        int max_degree);

}  // namespace anick
