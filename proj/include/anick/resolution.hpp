#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "anick/chains.hpp"
#include "anick/groebner_nc.hpp"
#include "anick/presentation.hpp"

namespace anick {

// One summand alpha * (chain (x) w); the map key is the word chain*w.
struct ResTerm {
  std::size_t chain = 0;
  std::size_t split = 0;  // length of the chain word inside the key
  Scalar coeff;
  bool operator==(const ResTerm&) const = default;
};

// An element of C_n (x) A, terms ordered by "f(x)t < g(x)s iff ft < gs", largest first.
class ResElement {
 public:
  using Map = std::map<Word, ResTerm, Descending<Word>>;

  ResElement() : terms_(Descending<Word>{nullptr}) {}
  ResElement(int level, const MonomialOrder* ord) : level_(level), terms_(Descending<Word>{ord}) {}

  int level() const { return level_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // adds c * (chain (x) w), where chain_len = |chain word| and key = chain word * w
  void add(Word key, std::size_t chain, std::size_t chain_len, const Scalar& c);
  void add_scaled(const ResElement& o, const Scalar& c);
  ResElement scaled(const Scalar& c) const;

  bool operator==(const ResElement& o) const { return level_ == o.level_ && terms_ == o.terms_; }

 private:
  int level_ = -1;
  Map terms_;
};

struct KernelStats {
  std::size_t kernel_checks = 0;    // d(i(u)) == u tested
  std::size_t kernel_failures = 0;
  std::size_t descent_steps = 0;    // steps of the splitting recursion
};

// Anick's resolution of K over A, built on free generators up to max_level.
class AnickResolution {
 public:
  AnickResolution(const Presentation& p, int max_level, int max_degree, int threads = 1);
  AnickResolution(NcGB gb, int max_level, int max_degree, int threads = 1);

  const NcGB& gb() const { return gb_; }
  const ChainSet& chains() const { return chains_; }
  const NcReducer& reducer() const { return reducer_; }
  const RingPtr& ring() const { return gb_.ring; }
  const MonomialOrder& order() const { return gb_.ring->order(); }
  int max_level() const { return max_level_; }
  int max_degree() const { return max_degree_; }
  const KernelStats& stats() const { return stats_; }

  // d_n(c (x) 1), an element of level n - 1
  const ResElement& differential(int n, std::size_t chain) const;
  // Overrides a stored differential (negative controls, experiments).
  void set_differential(int n, std::size_t chain, ResElement value);

  ResElement zero(int level) const { return ResElement(level, &order()); }
  ResElement generator(int n, std::size_t chain, const Word& w = {}) const;
  // right multiplication by a word, followed by normal forms
  ResElement times(const ResElement& u, const Word& w) const;
  // d_n applied to an element of level n >= 0
  ResElement apply_d(const ResElement& u) const;
  // augmentation on level -1
  Scalar augmentation(const ResElement& u) const;
  // i_n: level n - 1 -> level n; u must be a cycle. Adds to stats if given.
  ResElement split(int n, const ResElement& u, KernelStats* stats = nullptr) const;

  // normal form of a word as (word, coeff) pairs, cached
  const std::vector<std::pair<Word, Scalar>>& nf(const Word& w) const;

  std::string render(const ResElement& u) const;
  std::string render_pair(int level, const Word& key, const ResTerm& t) const;

 private:
  void build(int threads);
  ResElement compute_differential(int n, std::size_t chain, KernelStats& stats) const;

  NcGB gb_;
  NcReducer reducer_;
  ChainSet chains_;
  int max_level_;
  int max_degree_;
  std::vector<std::vector<ResElement>> diff_;  // [n][chain], n = 0..max_level
  KernelStats stats_;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<Word, std::vector<std::pair<Word, Scalar>>, WordHash> nf_cache_;
};

ResElement d0(const AnickResolution& res, Letter x);
ResElement i0(const AnickResolution& res, const ResElement& u);
ResElement dn(const AnickResolution& res, int n, std::size_t chain);
ResElement in_split(const AnickResolution& res, int n, const ResElement& u);

// Sparse matrix of d_n on the free generators of one degree:
// rows are n-chains, columns the (chain (x) normal word) pairs that occur.
struct GradedMatrix {
  int level = 0;
  int degree = 0;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
};

// Includes the augmentation as a level -1 block.
std::vector<GradedMatrix> differential_matrices(const AnickResolution& res);
std::vector<GradedMatrix> build_resolution(const Presentation& p, int max_level, int max_degree, int threads = 1);

struct BlockCheck {
  int level = 0;   // exactness at C_level (x) A
  int degree = 0;
  std::string method;  // "elimination" or "pivot"
  std::uint64_t dim = 0;
  std::uint64_t rank_out = 0;  // rank of d_level (epsilon for level -1)
  std::uint64_t rank_in = 0;   // rank of d_{level+1}
  bool exact = false;
};

struct DdFailure {
  int level = 0;
  int degree = 0;
  std::string chain;
};

struct VerifyOptions {
  std::uint64_t block_budget = 40000;  // largest dim(P_n) + dim(P_n+1) eliminated explicitly
  int threads = 1;
};

struct VerificationReport {
  bool dd_zero = true;
  bool exact = true;
  bool leading_certificate = true;
  std::size_t dd_checked = 0;
  std::size_t kernel_checks = 0;
  std::size_t kernel_failures = 0;
  std::size_t eliminated_blocks = 0;
  std::size_t pivot_blocks = 0;
  std::vector<DdFailure> dd_failures;
  std::vector<BlockCheck> blocks;
  bool ok() const { return dd_zero && exact && kernel_failures == 0; }
};

VerificationReport verify_resolution(const AnickResolution& res, int max_level, int max_degree,
                                     const VerifyOptions& opts = {});

// Scalar matrices of d_n (x)_A K, per level n >= 0 and chain degree.
struct ScalarMatrix {
  int level = 0;
  int degree = 0;
  std::vector<std::string> rows;  // n-chains
  std::vector<std::string> cols;  // (n-1)-chains
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
};
std::vector<ScalarMatrix> tensor_with_k(const AnickResolution& res);

// dims[(level, degree)] = dim of homology at C_level; homological index is level + 1.
struct TorTable {
  int max_level = 0;
  int max_degree = 0;
  std::map<std::pair<int, int>, std::uint64_t> dims;
  std::uint64_t total(int level) const;
};
// Needs the resolution built one level beyond max_level.
TorTable tor_dimensions(const AnickResolution& res, int max_level, int max_degree);

struct MinimalityWitness {
  int level = 0;
  std::string row;
  std::string col;
  Scalar value;
};
struct MinimalityReport {
  bool minimal = true;
  std::optional<MinimalityWitness> witness;
};
MinimalityReport is_minimal(const AnickResolution& res);

}  // namespace anick
