#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "anick/automaton.hpp"
#include "anick/ring.hpp"

namespace anick {

struct Chain {
  Word word;
  Word tail;
  int level = -1;
  std::ptrdiff_t parent = -1;  // index into level - 1
  int degree = 0;
};

// Anick n-chains over an antichain F, truncated by level and degree.
class ChainSet {
 public:
  ChainSet() = default;
  ChainSet(RingPtr ring, std::vector<Word> obstructions, int max_level, int max_degree);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Word>& obstructions() const { return obstructions_; }
  const WordAutomaton& automaton() const { return automaton_; }
  int max_level() const { return max_level_; }
  int max_degree() const { return max_degree_; }

  // levels -1 .. max_level
  const std::vector<Chain>& level(int n) const { return levels_.at(static_cast<std::size_t>(n + 1)); }
  std::size_t size(int n) const { return level(n).size(); }
  std::optional<std::size_t> find(int n, const Word& w) const;
  const Chain& at(int n, std::size_t i) const { return level(n)[i]; }

  // count[level + 1][degree]
  std::vector<std::vector<std::uint64_t>> counts() const;

 private:
  RingPtr ring_;
  std::vector<Word> obstructions_;
  WordAutomaton automaton_;
  int max_level_ = -1;
  int max_degree_ = 0;
  std::vector<std::vector<Chain>> levels_;
  std::vector<std::unordered_map<Word, std::size_t, WordHash>> index_;
};

// Throws InputError if F is not an antichain or contains a single letter.
ChainSet enumerate_chains(const RingPtr& ring, const std::vector<Word>& F, int max_level, int max_degree);

// map level -> per-degree counts, degrees 0..max_degree
std::map<int, std::vector<std::uint64_t>> chain_counts(const ChainSet& cs);

// The tails t_0, ..., t_n of the decomposition word = t_0 t_1 ... t_n, if word is an n-chain.
std::optional<std::vector<Word>> is_chain(const Word& word, const std::vector<Word>& F, int level);

}  // namespace anick
