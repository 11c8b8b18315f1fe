#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "anick/presentation.hpp"

namespace testing {

using namespace anick;

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

inline NcPoly P(const RingPtr& r, const std::string& s) { return parse_nc_polynomial(r, s); }
inline CommPoly Q(const RingPtr& r, const std::string& s) { return parse_comm_polynomial(r, s); }

// a single word written as a monomial, e.g. "x*y^2"
inline Word W(const RingPtr& r, const std::string& s) {
  if (s == "1") return {};
  return parse_nc_polynomial(r, s).lt();
}

inline CommMonomial M(const RingPtr& r, const std::string& s) { return parse_comm_polynomial(r, s).lt(); }

// all words of exactly length n over k letters
inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t x = 0; x < k; ++x) {
        Word v = w;
        v.push_back(static_cast<Letter>(x));
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Word> all_words_upto(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t i = 0; i <= n; ++i) {
    auto ws = all_words(k, i);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

inline std::vector<CommMonomial> all_monomials(std::size_t k, int deg) {
  std::vector<CommMonomial> out;
  std::vector<int> e(k, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == k) {
      e[i] = left;
      out.push_back(CommMonomial{e});
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (k == 0) return out;
  rec(rec, 0, deg);
  return out;
}

inline std::set<std::string> strings_of(const std::vector<NcPoly>& ps) {
  std::set<std::string> s;
  for (const auto& p : ps) s.insert(p.to_string());
  return s;
}

inline std::set<std::string> strings_of(const std::vector<CommPoly>& ps) {
  std::set<std::string> s;
  for (const auto& p : ps) s.insert(p.to_string());
  return s;
}

// random polynomial with small integer coefficients, words up to length len
inline NcPoly random_nc(const RingPtr& r, std::mt19937& rng, std::size_t len, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> length(0, len);
  std::uniform_int_distribution<std::size_t> letter(0, r->size() - 1);
  std::vector<NcPoly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Word w(length(rng));
    for (auto& x : w) x = static_cast<Letter>(letter(rng));
    ts.emplace_back(std::move(w), Scalar(coeff(rng)));
  }
  return NcPoly(r, std::move(ts));
}

inline CommPoly random_comm(const RingPtr& r, std::mt19937& rng, int deg, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, deg);
  std::vector<CommPoly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    CommMonomial m = r->one();
    int left = deg;
    for (auto& e : m.exps) {
      e = std::min(left, expo(rng));
      left -= e;
    }
    ts.emplace_back(std::move(m), Scalar(coeff(rng)));
  }
  return CommPoly(r, std::move(ts));
}

}  // namespace testing
