#include "anick/ring.hpp"

#include <set>

#include "anick/error.hpp"

namespace anick {

PolyRing::PolyRing(AlgebraKind kind, std::vector<Generator> gens, MonomialOrder order)
    : kind_(kind), gens_(std::move(gens)), order_(std::move(order)) {
  if (gens_.size() > 0xfffe) throw InputError("too many generators");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!seen.insert(g.name).second) throw InputError("duplicate generator '" + g.name + "'");
    if (g.degree < 1) throw InputError("generator '" + g.name + "' must have positive degree");
  }
  if (order_.precedence().size() != gens_.size()) throw InputError("order must rank every generator exactly once");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (order_.weight(static_cast<Letter>(i)) != gens_[i].degree) throw InputError("order weights disagree with generator degrees");
  if (kind_ == AlgebraKind::noncommutative && order_.kind() == OrderKind::lex)
    throw InputError("lex order requested for a noncommutative algebra (not a well-order on words)");
}

std::shared_ptr<const PolyRing> PolyRing::make(AlgebraKind kind, std::vector<Generator> gens) {
  std::vector<Letter> prec;
  std::vector<int> weights;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    prec.push_back(static_cast<Letter>(i));
    weights.push_back(gens[i].degree);
  }
  return std::make_shared<const PolyRing>(kind, std::move(gens), MonomialOrder(OrderKind::deglex, prec, weights));
}

std::optional<Letter> PolyRing::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

CommMonomial PolyRing::variable(Letter x) const {
  CommMonomial m = one();
  m.exps.at(x) = 1;
  return m;
}

std::string PolyRing::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += gens_.at(w[i]).name;
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string PolyRing::render(const CommMonomial& m) const {
  std::string s;
  for (Letter x : order_.precedence()) {
    int e = m.exps.at(x);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += gens_[x].name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

}  // namespace anick
