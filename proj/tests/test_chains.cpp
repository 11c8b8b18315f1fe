#include <doctest.h>

#include <map>

#include "anick/chains.hpp"
#include "anick/error.hpp"
#include "anick/groebner_nc.hpp"
#include "support.hpp"

using namespace anick;
using namespace testing;

namespace {

std::size_t occurrences(const Word& w, const std::vector<Word>& F, bool* at_end) {
  std::size_t n = 0;
  *at_end = false;
  for (const auto& f : F)
    for (auto& [l, r] : find_subword(w, f)) {
      ++n;
      if (r.empty()) *at_end = true;
    }
  return n;
}

// Chains straight from the definition: g*t with g an (n-1)-chain whose last tail is r,
// t a nonempty normal word, and r*t containing exactly one element of F, at its end.
// Returns level -> set of chain words, for words of length <= max_len.
std::map<int, std::set<Word>> oracle_chains(std::size_t k, const std::vector<Word>& F, int max_level,
                                            std::size_t max_len) {
  std::map<int, std::set<Word>> out;
  std::set<std::pair<Word, Word>> prev{{Word{}, Word{}}};
  out[-1].insert(Word{});
  std::vector<Word> normal;
  for (const auto& t : all_words_upto(k, max_len)) {
    bool e;
    if (!t.empty() && occurrences(t, F, &e) == 0) normal.push_back(t);
  }
  for (int n = 0; n <= max_level; ++n) {
    std::set<std::pair<Word, Word>> cur;
    for (const auto& [g, r] : prev) {
      if (n == 0) {
        for (std::size_t x = 0; x < k; ++x) cur.insert({Word{static_cast<Letter>(x)}, Word{static_cast<Letter>(x)}});
        break;
      }
      for (const auto& t : normal) {
        if (g.size() + t.size() > max_len) continue;
        bool at_end;
        if (occurrences(concat(r, t), F, &at_end) == 1 && at_end) cur.insert({concat(g, t), t});
      }
    }
    for (const auto& [g, r] : cur) out[n].insert(g);
    prev = std::move(cur);
  }
  return out;
}

std::set<Word> level_words(const ChainSet& cs, int n) {
  std::set<Word> s;
  for (const auto& c : cs.level(n)) s.insert(c.word);
  return s;
}

std::set<std::string> level_strings(const ChainSet& cs, int n) {
  std::set<std::string> s;
  for (const auto& c : cs.level(n)) s.insert(cs.ring()->render(c.word));
  return s;
}

std::vector<Word> leading(const Presentation& p, int d) {
  return nc_reduce_basis(nc_buchberger(p.nc_relations, p.ring, d)).leading_words();
}

// "c1*a1*b1" written as the B_n juxtaposition c1a1b1
std::string star(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    if (i) out += "*";
    out += s.substr(i, 2);
  }
  return out;
}

std::set<std::string> stars(std::initializer_list<const char*> ws) {
  std::set<std::string> s;
  for (const char* w : ws) s.insert(star(w));
  return s;
}

std::string pow_str(const std::string& x, int k) { return k == 1 ? x : x + "^" + std::to_string(k); }

}  // namespace

TEST_CASE("chains of x^3") {
  auto p = pres("generators x; relations x^3;");
  auto F = leading(p, 3);
  auto cs = enumerate_chains(p.ring, F, 5, 12);
  CHECK(level_strings(cs, 1) == std::set<std::string>{"x^3"});
  CHECK(level_strings(cs, 2) == std::set<std::string>{"x^4"});
  CHECK(level_strings(cs, 3) == std::set<std::string>{"x^6"});
  CHECK(level_strings(cs, 4) == std::set<std::string>{"x^7"});
  CHECK(level_strings(cs, 5) == std::set<std::string>{"x^9"});
  CHECK(cs.level(2)[0].tail == W(p.ring, "x"));

  CHECK(is_chain(W(p.ring, "x^6"), F, 3));
  CHECK_FALSE(is_chain(W(p.ring, "x^5"), F, 3));
  CHECK_FALSE(is_chain(W(p.ring, "x^5"), F, 2));
  CHECK_FALSE(is_chain(W(p.ring, "x^3*x^2"), F, 2));
  CHECK(is_chain(W(p.ring, "x"), F, 0));
  auto tails = is_chain(W(p.ring, "x^6"), F, 3);
  REQUIRE(tails);
  CHECK(*tails == std::vector<Word>{W(p.ring, "x"), W(p.ring, "x^2"), W(p.ring, "x"), W(p.ring, "x^2")});
}

TEST_CASE("chains of x^2 + y^2") {
  auto p = pres("generators x y; order deglex x > y; relations x^2 + y^2;");
  auto F = leading(p, 8);
  std::set<std::string> fs;
  for (const auto& f : F) fs.insert(p.ring->render(f));
  CHECK(fs == std::set<std::string>{"x^2", "x*y^2"});
  auto cs = enumerate_chains(p.ring, F, 6, 10);
  for (int n = 1; n <= 6; ++n)
    CHECK(level_strings(cs, n) == std::set<std::string>{pow_str("x", n) + "*y^2", pow_str("x", n + 1)});
}

TEST_CASE("B1 chain lists") {
  auto b = make_Bn(1);
  auto F = leading(b, 12);
  auto cs = enumerate_chains(b.ring, F, 5, 16);
  CHECK(level_strings(cs, 1) == stars({"a1b1c1", "c0a0", "c1a1b1", "b1c1a1", "c0c1", "b1a0"}));
  CHECK(level_strings(cs, 2) == stars({"a1b1c1a1", "c1a1b1c1", "c1a1b1a0", "b1c1a1b1", "c0c1a1b1"}));
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 5; ++n) counts.push_back(cs.size(n));
  CHECK(counts == std::vector<std::size_t>{6, 5, 6, 5, 6});

  // the general pattern: odd levels 2m+1 and even levels 2m
  auto rep = [](const char* s, int k) {
    std::string r;
    for (int i = 0; i < k; ++i) r += s;
    return r;
  };
  for (int n = 1; n <= 5; ++n) {
    int m = n / 2;
    std::set<std::string> want;
    if (n % 2 == 1) {
      for (std::string w : {rep("a1b1c1", m + 1), rep("c1a1b1", m + 1), rep("b1c1a1", m + 1), rep("b1c1a1", m) + "b1a0",
                            "c0" + rep("c1a1b1", m) + "c1", "c0" + rep("c1a1b1", m) + "a0"})
        want.insert(star(w));
    } else {
      for (std::string w : {rep("a1b1c1", m) + "a1", rep("c1a1b1", m) + "c1", rep("c1a1b1", m) + "a0",
                            rep("b1c1a1", m) + "b1", "c0" + rep("c1a1b1", m)})
        want.insert(star(w));
    }
    CHECK(level_strings(cs, n) == want);
  }
}

TEST_CASE("B2 chains contain every listed word plus the c0 c1 c2 family") {
  auto b = make_Bn(2);
  auto F = leading(b, 12);
  CHECK(F.size() == 10);
  auto cs = enumerate_chains(b.ring, F, 4, 16);
  std::map<int, std::set<std::string>> listed{
      {1, stars({"a2b2c2", "c0a0", "c1a1b1", "c2a2b2", "b1c1a1", "b2c2a2", "c0c1", "c1c2", "b1a0", "b2a1"})},
      {2, stars({"a2b2c2a2", "c1a1b1a0", "c1a1b1c1a1", "c2a2b2c2", "c2a2b2a1", "b1c1a1b1", "b2c2a2b2", "c0c1a1b1",
                 "c1c2a2b2"})},
      {3, stars({"a2b2c2a2b2c2", "c1a1b1c1a1b1", "c2a2b2c2a2b2", "b1c1a1b1a0", "b1c1a1b1c1a1", "b2c2a2b2c2a2",
                 "b2c2a2b2a1", "c0c1a1b1a0", "c0c1a1b1c1a1", "c1c2a2b2a1", "c1c2a2b2c2"})},
      {4, stars({"a2b2c2a2b2c2a2", "c1a1b1c1a1b1a0", "c1a1b1c1a1b1c1a1", "c2a2b2c2a2b2a1", "c2a2b2c2a2b2c2",
                 "b1c1a1b1c1a1b1", "b2c2a2b2c2a2b2", "c1c2a2b2c2a2b2", "c0c1a1b1c1a1b1"})}};
  std::map<int, std::set<std::string>> extra{{1, {}},
                                             {2, stars({"c0c1c2"})},
                                             {3, stars({"c0c1c2a2b2"})},
                                             {4, stars({"c0c1c2a2b2a1", "c0c1c2a2b2c2"})}};
  for (int n = 1; n <= 4; ++n) {
    auto got = level_strings(cs, n);
    std::set<std::string> want = listed[n];
    want.insert(extra[n].begin(), extra[n].end());
    CHECK(got == want);
  }
  // c0*c1*c2 really is a 2-chain: c0c1 is a 1-chain with tail c1, and c1*c2 is exactly one leading word
  auto tails = is_chain(W(b.ring, "c0*c1*c2"), F, 2);
  REQUIRE(tails);
  CHECK(tails->size() == 3);
  CHECK(cs.size(1) == 10);
  CHECK(cs.size(2) == 10);
  CHECK(cs.size(3) == 12);
  CHECK(cs.size(4) == 11);
}

TEST_CASE("enumeration matches the definition") {
  struct Case {
    Presentation p;
    int gb_degree;
    int max_level;
    std::size_t max_len;
  };
  std::vector<Case> cases{
      {pres("generators x; relations x^3;"), 3, 6, 12},
      {pres("generators x y; order deglex x > y; relations x^2 + y^2;"), 9, 6, 9},
      {pres("generators x y; order deglex x > y; relations x^2 - x*y;"), 9, 5, 9},
      {pres("generators x y z; order deglex x > y > z; relations x^2; x*y - z*x;"), 7, 4, 7},
      {pres("generators x y; relations x*y*x; y*x*y*y;"), 8, 4, 8},
      {make_Bn(1), 7, 5, 7},
      {make_Bn(2), 6, 4, 6},
  };
  for (const auto& c : cases) {
    auto F = leading(c.p, c.gb_degree);
    auto cs = enumerate_chains(c.p.ring, F, c.max_level, static_cast<int>(c.max_len));
    auto oracle = oracle_chains(c.p.ring->size(), F, c.max_level, c.max_len);
    for (int n = -1; n <= c.max_level; ++n) {
      CHECK(level_words(cs, n) == oracle[n]);
      for (const auto& ch : cs.level(n)) {
        auto t = is_chain(ch.word, F, n);
        REQUIRE(t);
        if (n >= 0) CHECK(t->back() == ch.tail);
      }
    }
    // is_chain rejects everything else
    std::size_t wrong = 0;
    for (const auto& w : all_words_upto(c.p.ring->size(), std::min<std::size_t>(c.max_len, 6)))
      for (int n = 1; n <= c.max_level; ++n)
        if (static_cast<bool>(is_chain(w, F, n)) != (oracle[n].count(w) > 0)) ++wrong;
    CHECK(wrong == 0);
  }
}

TEST_CASE("structural properties") {
  auto b = make_Bn(2);
  auto F = leading(b, 12);
  auto cs = enumerate_chains(b.ring, F, 6, 20);
  int prev_min = -1;
  for (int n = 0; n <= 6; ++n) {
    int mn = 1 << 30;
    for (const auto& c : cs.level(n)) {
      mn = std::min(mn, c.degree);
      const auto& parent = cs.at(n - 1, static_cast<std::size_t>(c.parent));
      CHECK(c.word == concat(parent.word, c.tail));
      CHECK(c.level == n);
      CHECK_FALSE(c.tail.empty());
    }
    CHECK(mn > prev_min);
    prev_min = mn;
  }
  auto counts = cs.counts();
  CHECK(counts[0][0] == 1);
  for (std::size_t d = 1; d < counts[0].size(); ++d) CHECK(counts[0][d] == 0);
  CHECK(counts[1][1] == 9);
  auto cc = chain_counts(cs);
  std::uint64_t total2 = 0;
  for (auto v : cc.at(2)) total2 += v;
  CHECK(total2 == cs.size(2));
}

TEST_CASE("free algebra and bad inputs") {
  auto f = pres("generators x y z;");
  auto cs = enumerate_chains(f.ring, {}, 4, 10);
  CHECK(cs.size(0) == 3);
  for (int n = 1; n <= 4; ++n) CHECK(cs.size(n) == 0);

  auto r = pres("generators x y;").ring;
  CHECK_THROWS_AS(enumerate_chains(r, {W(r, "x*y"), W(r, "x*y*x")}, 3, 8), InputError);
  CHECK_THROWS_AS(enumerate_chains(r, {W(r, "x")}, 3, 8), InputError);
}
