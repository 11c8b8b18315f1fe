#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace anick {

using Letter = std::uint16_t;

// A monomial of the free algebra. Empty means 1.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Letter x : w) {
      h ^= x + 1;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

inline Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Word concat(const Word& a, const Word& b, const Word& c) {
  Word r;
  r.reserve(a.size() + b.size() + c.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  r.insert(r.end(), c.begin(), c.end());
  return r;
}

inline Word subword(const Word& w, std::size_t pos, std::size_t len = std::string::npos) {
  if (pos >= w.size()) return {};
  std::size_t end = len == std::string::npos ? w.size() : std::min(w.size(), pos + len);
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(end));
}

// A monomial of the commutative polynomial ring.
struct CommMonomial {
  std::vector<int> exps;

  bool operator==(const CommMonomial&) const = default;
  bool divides(const CommMonomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }
};

inline CommMonomial operator*(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

// a / b, assuming b divides a
inline CommMonomial quotient(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= b.exps[i];
  return r;
}

inline CommMonomial lcm(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

struct Generator {
  std::string name;
  int degree = 1;
  bool operator==(const Generator&) const = default;
};

}  // namespace anick
