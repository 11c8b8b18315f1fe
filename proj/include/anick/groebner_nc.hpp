#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "anick/automaton.hpp"
#include "anick/polynomial.hpp"

namespace anick {

// A Groebner basis of a two-sided ideal, certified up to complete_to_degree:
// every ambiguity of degree <= complete_to_degree resolves.
struct NcGB {
  std::vector<NcPoly> basis;
  MonomialOrder order;
  int complete_to_degree = 0;
  RingPtr ring;

  std::vector<Word> leading_words() const;
};

struct Obstruction {
  enum class Kind { overlap, inclusion };
  Word left;   // m1
  Word right;  // m2
  Kind kind = Kind::overlap;
  std::size_t first = 0;   // f: lt(f)*m2 == m1*lt(g)   (overlap)
  std::size_t second = 0;  // g: lt(f) == m1*lt(g)*m2   (inclusion)
  int ambiguity_degree = 0;
  Word ambiguity;
  std::size_t offset = 0;  // |m1|
};

// All factorizations haystack = prefix * needle * suffix, leftmost first.
std::vector<std::pair<Word, Word>> find_subword(const Word& haystack, const Word& needle);

std::optional<NcPoly> nc_reduce_once(const NcPoly& f, const NcPoly& g);

NcPoly nc_normal_form(const NcPoly& f, const std::vector<NcPoly>& G);

std::vector<Obstruction> find_obstructions(const std::vector<NcPoly>& G);

// Throws InputError if ob no longer matches G.
NcPoly nc_s_polynomial(const Obstruction& ob, const std::vector<NcPoly>& G);

// Truncated completion; throws BoundError if an input exceeds max_degree.
NcGB nc_buchberger(const std::vector<NcPoly>& gens, const RingPtr& ring, int max_degree);

NcGB nc_reduce_basis(const NcGB& G);

// Words of degree <= d with no leading word as a subword, indexed by degree.
std::vector<std::vector<Word>> normal_words(const NcGB& G, int d);

// Number of normal words in each degree 0..d; no enumeration.
std::vector<std::uint64_t> normal_word_counts(const NcGB& G, int d);

// Every obstruction of degree <= complete_to_degree reduces to zero.
struct DiamondReport {
  std::size_t checked = 0;
  std::vector<Obstruction> failures;
  bool ok() const { return failures.empty(); }
};
DiamondReport diamond_check(const NcGB& G);

// Normal forms against a fixed basis, via an automaton over the leading words.
class NcReducer {
 public:
  NcReducer() = default;
  explicit NcReducer(const NcGB& G);
  NcReducer(RingPtr ring, std::vector<NcPoly> basis);

  NcPoly reduce(const NcPoly& f) const;
  NcPoly reduce(const Word& w) const;
  bool is_normal(const Word& w) const { return automaton_.is_normal(w); }
  const WordAutomaton& automaton() const { return automaton_; }
  const std::vector<NcPoly>& basis() const { return basis_; }
  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
  std::vector<NcPoly> basis_;
  WordAutomaton automaton_;
};

}  // namespace anick
